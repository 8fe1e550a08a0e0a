//! Even characteristic family on μ_k ∪ βμ_k.
use trs_hull::code::{analyze, DistanceMode};
use trs_hull::gf::Field;
use trs_hull::trs::{self, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Field::gf(2, 4)?;
    let built = trs::construct_one_hull(Family::Lemma31, &f, 16, 5, 1, 3, f.gamma())?;
    let report = analyze(&built.code, DistanceMode::Auto, Some(built.params.report_params()))?;
    println!(
        "[{}, {}] hull {} MDS {} d {:?} certificate {:?}",
        report.n, report.k, report.hull_dimension, report.is_mds, report.min_distance, report.non_rs_certificate
    );
    let points: Vec<_> = built.params.alpha().iter().map(|&a| f.format_element(a)).collect();
    println!("points {}", points.join(" "));
    Ok(())
}
