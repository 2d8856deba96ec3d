(def v
  (let (id (lam (A *) (lam (x A) x)) (Pi (A *) (Pi (x A) A))) (app (app id Bool) true))
  Bool)
(main v)
