; if is allowed at the type level when both branches are small types
(assume b Bool)
(def choose (lam (x (if b Bool (Sigma (p Bool) Bool))) x)
  (Pi (x (if b Bool (Sigma (p Bool) Bool))) (if b Bool (Sigma (p Bool) Bool))))
(main choose)
