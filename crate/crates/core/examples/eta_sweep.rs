//! Sweep η over GF(3^8) with points in GF(81) and stop at the first witness.
use trs_hull::gf::Field;
use trs_hull::search::{self, EtaRange, SearchSpec, WitnessSearch};
use trs_hull::trs::Family;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let small = Field::gf(3, 4)?;
    let spec = SearchSpec::new(&small, None, Family::Lemma32, 5, 2, 3, EtaRange::AllNonzero)?;
    let result = search::sweep_eta(&spec)?;
    println!("GF(81): {:?}", result.summary);
    println!("MDS exponents {:?}", result.mds_exponents());

    let big = Field::gf(3, 8)?;
    let spec = SearchSpec::new(&big, Some(81), Family::Lemma32, 5, 2, 3, EtaRange::OutsideSubfield)?;
    match search::find_non_rs_mds_one_hull(&spec)? {
        WitnessSearch::Found(entry) => println!("witness η = g^{} schur dim {}", entry.exponent, entry.report.schur_dimension),
        WitnessSearch::NotFound(summary) => println!("no witness: {summary:?}"),
    }
    Ok(())
}
