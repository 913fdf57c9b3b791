//! Truth table, ANF, univariate form and Walsh spectrum of one function.

use algimm::funcrep::{bits_to_hex, univariate_degree};
use algimm::{make_field, BooleanFunction, VectorialFunction};

fn main() -> algimm::Result<()> {
    let field = make_field(4)?;
    // f(x) = Tr(x^3)
    let f = BooleanFunction::from_fn(4, |x| field.abs_trace(field.pow(field.elem(x), 3)) == 1);
    println!("truth table {}", f.to_hex());
    println!("anf         {}", bits_to_hex(f.anf()));
    println!("degree      {}", f.degree());

    let uni = f.univariate(&field)?;
    let terms: Vec<String> = uni
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("{:x}*x^{i}", c.bits()))
        .collect();
    println!("univariate  {} (degree {})", terms.join(" + "), univariate_degree(&uni));

    let w = f.walsh(&field)?;
    let parseval: i64 = w.values.iter().map(|v| v * v).sum();
    println!("walsh       {:?}", w.values);
    println!("parseval    {parseval} = 2^8");

    let s = VectorialFunction::from_fn(field, 4, |x| [0xc, 5, 6, 0xb, 9, 0, 0xa, 0xd, 3, 0xe, 0xf, 8, 4, 7, 1, 2][x])?;
    println!("sbox degree {}, univariate degree {}", s.degree(), univariate_degree(&s.univariate()?));
    Ok(())
}
