//! Filter-generator keystream, Berlekamp-Massey and spectral immunity.

use algimm::annihil::product_annihilators;
use algimm::seq::{berlekamp_massey, spectral_immunity, FilterGenerator};
use algimm::{make_field, BooleanFunction, FieldElement, VectorialFunction};

fn main() -> algimm::Result<()> {
    let field = make_field(5)?;
    let f = BooleanFunction::from_fn(5, |x| (field.abs_trace(field.pow(field.elem(x), 7)) ^ (x & 1) as u8) == 1);
    let vf = VectorialFunction::from_boolean(field, &f)?;
    let gen = FilterGenerator::new(vf.clone(), FieldElement(1))?;

    let period = gen.period();
    let z: Vec<u8> = gen.keystream(2 * period).iter().map(|&v| v as u8).collect();
    let lfsr = berlekamp_massey(&z);
    println!("period {period}, linear complexity {}, regenerates {}", lfsr.lc, lfsr.regenerates(&z));

    let basis = product_annihilators(&vf, 3)?;
    if let Some(g) = basis.basis.first() {
        let u = gen.annihilating_sequence(g, 2 * period)?;
        let bits: Vec<u8> = u.bits.clone();
        println!("annihilator of degree {}: sequence complexity {}", g.degree(), berlekamp_massey(&bits).lc);
    }
    println!("spectral immunity {:?}", spectral_immunity(&vf, 1 << 20).value);
    Ok(())
}
