//! The algebraic complement and how preimages and annihilators change.

use algimm::complement::{an_identity_holds, complement_generator_division, complement_vectorial, lda_sandwich};
use algimm::{make_field, VectorialFunction};

fn main() -> algimm::Result<()> {
    let field = make_field(3)?;
    let f = VectorialFunction::new(field, 2, vec![1, 0, 3, 3, 2, 0, 1, 2])?;
    let pair = complement_vectorial(&f);
    println!("F   = {:?}", f.table());
    println!("F^c = {:?}", pair.fc.table());
    for b in 0..4u16 {
        println!(
            "b = {b}: {:?} -> {:?} ({:?}), annihilator identity {}",
            f.preimage(b),
            pair.fc.preimage(b),
            pair.fiber_case(b),
            an_identity_holds(&pair, b)?
        );
    }
    println!("LDA sandwich holds: {:?}", lda_sandwich(&pair));
    let div = complement_generator_division(&f);
    println!("G_F / G_F^c = {:?}, remainder zero: {}", div.quotient.to_hex(), div.divides);
    Ok(())
}
