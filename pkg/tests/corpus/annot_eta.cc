; the declared type names its binder differently, alpha equivalence bridges it
(def use (lam (f (Pi (x Bool) Bool)) (app f true)) (Pi (f (Pi (y Bool) Bool)) Bool))
(main (app use (lam (z Bool) z)))
