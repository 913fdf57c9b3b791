//! Arithmetic in GF(2^8) with the built-in defining polynomial.

use algimm::{make_field, FieldElement};

fn main() -> algimm::Result<()> {
    let f = make_field(8)?;
    println!("GF(2^8): poly {:#x}, alpha {:#x}", f.poly(), f.alpha().bits());

    let a = FieldElement(0x57);
    let b = FieldElement(0x83);
    println!("{:02x} * {:02x} = {:02x}", a.bits(), b.bits(), f.mul(a, b).bits());
    let inv = f.inv(a)?;
    println!("{:02x}^-1 = {:02x}, check {:02x}", a.bits(), inv.bits(), f.mul(a, inv).bits());
    println!("log {:02x} = {:?}", a.bits(), f.log(a));
    println!("Tr({:02x}) = {}", a.bits(), f.abs_trace(a));

    // GF(2^4) sits inside GF(2^8)
    let emb = f.embedding(4)?;
    for v in [1u16, 2, 0xf] {
        println!("embed {v:x} -> {:02x}", emb.embed(v).bits());
    }
    Ok(())
}
