; right-nested telescope, the same shape the compiler builds for environments
(def chain
  (pair Bool (pair true false (Sigma (q Bool) Bool)) (Sigma (A *) (Sigma (q A) Bool)))
  (Sigma (A *) (Sigma (q A) Bool)))
(main (fst (snd chain)))
