(def not (lam (x Bool) (if x false true)) (Pi (x Bool) Bool))
(main (app not (app not (app not (app not (app not true))))))
