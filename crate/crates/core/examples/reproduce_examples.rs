//! Check every built-in worked example and print its claims.
use trs_hull::search::{self, ExampleId};

fn main() {
    let mut all = true;
    for id in ExampleId::ALL {
        let report = search::verify_example(id);
        for claim in &report.claims {
            println!("{id} {} {:<24} {}", claim.status, claim.name, claim.detail);
        }
        all &= report.passed();
    }
    std::process::exit(if all { 0 } else { 1 });
}
