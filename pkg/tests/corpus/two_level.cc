(def star_id (lam (A *) A) (Pi (A *) *))
(def applied (app star_id Bool) *)
(main (lam (x applied) x))
