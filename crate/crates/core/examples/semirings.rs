//! Centrally essential semirings: a powerset semiring, Boolean and rational group semirings, T2 over {0,1,2}.

use ce_lab::groups::quaternion_q8;
use ce_lab::semirings::{
    boolean_group_semiring, is_ce_semiring, noncentral_complemented_idempotent, powerset_semiring, saturating_semiring,
    semiring_center, semiring_predicates, upper_triangular_semiring, Coefficients, GroupSemiring,
};
use ce_lab::Result;

fn main() -> Result<()> {
    let labels = ["1", "a", "b", "c"].map(String::from);
    let table = vec![vec![0, 1, 2, 3], vec![1, 1, 1, 3], vec![2, 2, 2, 3], vec![3, 3, 3, 3]];
    let s = powerset_semiring(&labels, &table)?;
    let z: Vec<&str> = semiring_center(&s).into_iter().map(|i| s.label(i)).collect();
    println!("powerset semiring: {} elements, center {z:?}", s.size());
    println!("  {}", is_ce_semiring(&s).to_json());
    println!("  {}", semiring_predicates(&s).to_json());

    let b = boolean_group_semiring(&quaternion_q8())?;
    println!("B[Q8]: {} elements, CE {}", b.size(), is_ce_semiring(&b).verdict);

    let q = GroupSemiring::new(Coefficients::NonNegativeRationals, quaternion_q8());
    let x = q.sample_elements(6, 1).pop().expect("sample");
    let z = q.class_sum(&q.group().center());
    if let Some(y) = q.class_sum_witness(&x) {
        println!("Q+[Q8]: ({}) · ({}) = {}", q.format(&x), q.format(&z), q.format(&y));
    }
    println!("  {}", q.is_ce(1000, 1)?.to_json());
    println!("  {}", q.predicates(1000, 1)?.to_json());

    let t = upper_triangular_semiring(&saturating_semiring(2)?, 2)?;
    let (e, f) = noncentral_complemented_idempotent(&t).expect("e11 and e22");
    println!("T2({{0,1,2}}): {} + {} = 1, CE {}", t.label(e), t.label(f), is_ce_semiring(&t).verdict);
    Ok(())
}
