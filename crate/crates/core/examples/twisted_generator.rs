//! Rows of a twisted generator are evaluations of x^i + η x^(k-1+t) at the hook.
use trs_hull::gf::Field;
use trs_hull::trs::{self, TwistedRsParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Field::gf(5, 1)?;
    let alpha: Vec<_> = f.elements().collect();
    let params = TwistedRsParams::new(&f, alpha, 2, 2, 1, f.from_int(3))?;
    println!("twist degree {}", params.twist_degree());
    let g = trs::trs_generator(&f, &params);
    for row in g.row_vecs() {
        println!("  {:?}", row.iter().map(|x| x.value()).collect::<Vec<_>>());
    }
    let word = params.evaluate(&f, &[f.one(), f.from_int(2)]);
    println!("1 + 2x + 6x^3 -> {:?}", word.iter().map(|x| x.value()).collect::<Vec<_>>());
    Ok(())
}
