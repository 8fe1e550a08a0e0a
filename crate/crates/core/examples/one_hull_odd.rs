//! Odd characteristic family: dimension k - 1.
use trs_hull::gf::Field;
use trs_hull::trs;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Field::gf(3, 4)?;
    for e in [0, 1, 2] {
        let code = trs::construct_lemma32(&f, 5, 2, 3, f.gamma_pow(e))?;
        println!(
            "η = g^{e}: [{}, {}] hull {} MDS {}",
            code.length(),
            code.dimension(),
            code.hull_dimension(),
            code.is_mds()
        );
    }
    match trs::construct_lemma32(&f, 5, 2, 1, f.one()) {
        Err(e) => println!("h = 1 rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
