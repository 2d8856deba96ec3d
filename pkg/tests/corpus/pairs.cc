(def swap
  (lam (p (Sigma (x Bool) Bool)) (pair (snd p) (fst p) (Sigma (x Bool) Bool)))
  (Pi (p (Sigma (x Bool) Bool)) (Sigma (x Bool) Bool)))
(main (fst (app swap (pair true false (Sigma (x Bool) Bool)))))
