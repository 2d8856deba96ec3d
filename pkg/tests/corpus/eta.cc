(assume f (Pi (x Bool) Bool))
(def eta (lam (x Bool) (app f x)) (Pi (x Bool) Bool))
(main (app eta true))
