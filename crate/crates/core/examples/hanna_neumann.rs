//! Run profiles of rank-two cores and the rank estimate for intersections,
//! compared with the classical bounds on a family of examples.

use stallings::hn::{hn_profile, loop_family, shn_report, write_csv};
use stallings::{LabeledCore, Word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for gens in ["ab", "b", "a,bAB,bb"] {
        let c = LabeledCore::from_words(2, &Word::parse_list(gens)?)?;
        let p = hn_profile(&c)?;
        println!("<{gens}>: H={} n1={} n2={} rank={}", p.h, p.n[0], p.n[1], p.rank);
    }

    let a = LabeledCore::from_words(2, &Word::parse_list("a,bAB,bb")?)?;
    print!("{}", shn_report(&a, &a)?);

    let mut rows = Vec::new();
    for k in 1..=6 {
        let c = loop_family(k);
        let r = shn_report(&c, &c)?;
        println!("k={k}: lhs={} theorem={} burns={} tightest={}", r.lhs, r.rhs(), r.classical.burns, r.tightest);
        rows.push(r.row());
    }
    write_csv(&rows, std::io::stdout())?;
    Ok(())
}
