//! Schur square dimension separates RS codes from twisted ones.
use trs_hull::code::LinearCode;
use trs_hull::gf::Field;
use trs_hull::trs::{self, TwistedRsParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Field::gf(2, 4)?;
    let alpha: Vec<_> = f.nonzero_by_exponent().take(12).collect();
    let rs = LinearCode::new(trs::grs_generator(&f, &alpha, &vec![f.one(); 12], 4)?)?;
    println!("RS: schur dim {} -> {:?}", rs.schur_square().dimension(), rs.non_rs_certificate());
    let params = TwistedRsParams::new(&f, alpha, 4, 1, 2, f.gamma())?;
    let twisted = LinearCode::new(trs::trs_generator(&f, &params))?;
    println!("TRS: schur dim {} -> {:?}", twisted.schur_square().dimension(), twisted.non_rs_certificate());
    Ok(())
}
