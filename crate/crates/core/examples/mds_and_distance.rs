//! MDS test by minors against enumerated minimum distance.
use trs_hull::code::{analyze, DistanceMode, LinearCode};
use trs_hull::gf::Field;
use trs_hull::trs;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Field::gf(2, 3)?;
    let alpha: Vec<_> = f.elements().take(7).collect();
    let v = vec![f.one(); 7];
    let rs = LinearCode::new(trs::grs_generator(&f, &alpha, &v, 3)?)?;
    println!("RS [7, 3]: MDS {}, d = {}", rs.is_mds(), rs.min_distance_bruteforce()?);
    println!("weight distribution {:?}", rs.weight_distribution()?);
    let report = analyze(&rs, DistanceMode::Auto, None)?;
    println!("{}", serde_json::to_string(&report)?);
    Ok(())
}
