//! Lists the tight structures on Y_n and how each is reached by stabilizing F.
//!
//!     cargo run --example census -- 6

use tight_brieskorn::census;

fn main() -> tight_brieskorn::Result<()> {
    let n: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let records = census::census(n)?;
    println!("{} structures on Y_{n} (bound {})", records.len(), n * (n - 1) / 2);
    for r in &records {
        println!("  eta({},{})  l={} r={}  tb={} rot={}", r.i, r.j, r.l, r.r, r.twisting, r.rotation);
    }
    let first = census::descriptors(n)?.remove(0);
    let fz = census::factorizations(&first)?;
    println!("{:?}\n  via torsion: {:?}\n  via eta:     {:?}", fz.target, fz.through_torsion, fz.through_eta);
    Ok(())
}
