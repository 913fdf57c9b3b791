//! Cyclic codes of length 2^n - 1: the code of G_F, preimage codes, LCD
//! test, minimum distance and the Hartmann-Tzeng bound.

use algimm::codes::{
    code_from_preimage, code_report, generator_g_f, ht_bound, is_lcd, min_distance, CyclicCode,
    GenPoly, HtCoprime, DEFAULT_BUDGET,
};
use algimm::{make_field, BooleanFunction, VectorialFunction};

fn main() -> algimm::Result<()> {
    let field = make_field(4)?;

    // roots alpha^1, alpha^2, alpha^3, alpha^4: a BCH code of designed distance 5
    let bch = CyclicCode::new(field.clone(), GenPoly::from_exponents(&field, &[1, 2, 3, 4]));
    println!("BCH: k = {}, d = {:?}", bch.dimension(), min_distance(&bch, DEFAULT_BUDGET).min_distance);
    println!("     HT bound {}", ht_bound(bch.defining_set(), 4, HtCoprime::Order).value);

    let f = VectorialFunction::from_boolean(field.clone(), &BooleanFunction::from_hex(4, "7e81")?)?;
    let g = generator_g_f(&f);
    println!("G_F: degree {}, coefficients {:?}", g.degree(), g.to_hex());
    for b in 0..2 {
        let pc = code_from_preimage(&f, b);
        let report = code_report(&pc.code, pc.contains_zero(), DEFAULT_BUDGET);
        println!(
            "C(F^-1({b})): k = {}, d = {:?}, lcd = {}, weight-height = {:?}",
            report.dimension, report.min_distance, is_lcd(&pc.code).lcd, report.min_weight_height
        );
    }
    Ok(())
}
