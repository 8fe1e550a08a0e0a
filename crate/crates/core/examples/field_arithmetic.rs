//! Arithmetic in GF(2^4) and its subfield GF(4).
use trs_hull::gf::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Field::parse("GF(2^4)")?;
    println!("modulus coefficients {:?} (Conway: {})", f.modulus(), f.is_conway());
    let g = f.gamma();
    let a = f.parse_element("g^3")?;
    let b = f.add(g, f.one());
    println!("g^3 * (g + 1) = {}", f.format_element(f.mul(a, b)));
    println!("(g + 1)^-1 = {}", f.format_element(f.inv(b)?));
    println!("order of g^5 = {:?}", f.mult_order(f.gamma_pow(5)));
    for s in f.subfield_orders() {
        let gen = f.subfield_generator(s as u64)?;
        println!("GF({s}) generated by {}", f.format_element(gen));
    }
    Ok(())
}
