//! Hull of a small code computed two independent ways.
use trs_hull::code::LinearCode;
use trs_hull::gf::Field;
use trs_hull::linalg::Matrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Field::gf(3, 1)?;
    let g = Matrix::from_values(&f, 2, 4, &[1, 1, 1, 0, 0, 1, 2, 1])?;
    let c = LinearCode::new(g)?;
    let dual = c.dual();
    println!("[{}, {}] code, dual dimension {}", c.length(), c.dimension(), dual.dimension());
    println!("hull by intersection {}", c.hull_dimension());
    println!("hull by rank of G G^T {}", c.hull_dimension_by_rank());
    for row in c.hull_basis().row_vecs() {
        println!("  hull vector {:?}", row.iter().map(|x| x.value()).collect::<Vec<_>>());
    }
    Ok(())
}
