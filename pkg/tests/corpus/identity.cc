; the polymorphic identity function
(def id (lam (A *) (lam (x A) x)) (Pi (A *) (Pi (x A) A)))
(main (app (app id Bool) true))
