//! Annihilators and algebraic immunity.

use algimm::annihil::{ai_boolean, ai_vectorial, annihilator_basis, lda_product};
use algimm::{make_field, BooleanFunction, VectorialFunction};

fn main() -> algimm::Result<()> {
    let maj = BooleanFunction::from_hex(3, "e8")?;
    println!("majority: AI = {:?}", ai_boolean(&maj));

    let basis = annihilator_basis(&maj.support(), 2, 3)?;
    println!("degree-2 annihilators of the support: {}", basis.dimension());
    for g in &basis.basis {
        println!("  tt {} degree {}", g.to_hex(), g.degree());
    }

    let field = make_field(4)?;
    let s = VectorialFunction::from_fn(field, 2, |x| ((x * 5 + x / 3) % 4) as u16)?;
    let ai = ai_vectorial(&s);
    println!("(4,2)-function: AI = {} at b = {:?}", ai.value, ai.witness);
    println!("  per preimage {:?}", ai.per_preimage);
    println!("  lowest degree of g with g F = 0: {:?}", lda_product(&s));
    Ok(())
}
