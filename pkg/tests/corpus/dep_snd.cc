(assume p (Sigma (A *) A))
(def ty (fst p) *)
(def vl (snd p) (fst p))
(main vl)
