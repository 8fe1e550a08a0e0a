//! Exact elimination over GF(7).
use trs_hull::gf::Field;
use trs_hull::linalg::Matrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Field::gf(7, 1)?;
    let a = Matrix::from_values(&f, 3, 4, &[2, 4, 6, 1, 3, 6, 2, 5, 0, 1, 5, 2])?;
    let (r, pivots) = a.rref();
    println!("rank {} pivots {:?}", a.rank(), pivots);
    for row in r.row_vecs() {
        println!("  {:?}", row.iter().map(|x| x.value()).collect::<Vec<_>>());
    }
    let ns = a.null_space();
    println!("null space dimension {}", ns.rows());
    assert!(a.mul(&ns.transpose())?.is_zero());
    let square = a.select_columns(&[0, 1, 3]);
    println!("det of columns 0,1,3 = {}", square.det()?.value());
    let b = Matrix::from_values(&f, 2, 4, &[1, 2, 3, 4, 0, 0, 0, 1])?;
    println!("row-space intersection dimension {}", a.row_space_intersection(&b)?.rows());
    Ok(())
}
