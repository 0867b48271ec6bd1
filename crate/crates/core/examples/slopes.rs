use tight_brieskorn::slope::{self, Slope, UnimodularMatrix};

fn main() -> tight_brieskorn::Result<()> {
    let s = Slope::from_ratio(-11, 2)?;
    let ncf = slope::neg_continued_fraction(-11, 2)?;
    let terms: Vec<String> = ncf.coefficients().iter().map(|c| c.to_string()).collect();
    println!("{s} = [{}], back to {}", terms.join(", "), slope::eval_ncf(&ncf));
    println!("tight structures on the solid torus with slope -5/2: {}", slope::tight_count_solid_torus(&Slope::from_ratio(-5, 2)?)?);

    // the gluing map carries the meridian slopes 1/k somewhere predictable
    let a3 = UnimodularMatrix::a3(4);
    for k in 1..=4 {
        let before = Slope::from_ratio(1, k)?;
        println!("A3: {before} -> {}", slope::mobius_apply(&a3, &before));
    }
    Ok(())
}
