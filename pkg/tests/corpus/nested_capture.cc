(def nest (lam (A *) (lam (x A) (lam (b Bool) (if b x x))))
  (Pi (A *) (Pi (x A) (Pi (b Bool) A))))
(main (app (app (app nest Bool) false) true))
