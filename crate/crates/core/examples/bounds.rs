//! Degree bounds from code distances and root patterns.

use algimm::bounds::{ai_upper, consecutive_zero_bound_with, lda_lower_from_distance, Thm12Convention};
use algimm::codes::HtCoprime;

fn main() -> algimm::Result<()> {
    for (n, delta) in [(3, 4), (4, 6), (5, 12)] {
        let r = lda_lower_from_distance(delta, n, Thm12Convention::Strict)?;
        println!("n = {n}, distance {delta}: no annihilator below degree {}", r.value);
    }
    for m in 1..=4 {
        println!("AI of a surjective (4,{m})-function is at most {}", ai_upper(4, m).value);
    }
    let defining = [1, 2, 3, 5, 6, 7];
    for conv in [Thm12Convention::Strict, Thm12Convention::Weak] {
        if let Some(r) = consecutive_zero_bound_with(&defining, 4, false, HtCoprime::Order, conv) {
            println!("{conv:?}: LDA >= {} from {:?}", r.value, r.certificate);
        }
    }
    Ok(())
}
