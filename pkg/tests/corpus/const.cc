(def const (lam (A *) (lam (B *) (lam (x A) (lam (y B) x))))
  (Pi (A *) (Pi (B *) (Pi (x A) (Pi (y B) A)))))
(main (app (app (app (app const Bool) Bool) true) false))
