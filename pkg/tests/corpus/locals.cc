(def tst
  (let (x true) (let (y (if x false true) Bool) (pair x y (Sigma (p Bool) Bool))))
  (Sigma (p Bool) Bool))
(main (snd tst))
