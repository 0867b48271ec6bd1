//! Kernel ranks for the surgery cobordisms, and the long exact sequence
//! rank count they feed into.

use tight_brieskorn::homology::{cobordism_kernel, ksequence_rank_check, CobordismPresentation};

fn main() -> tight_brieskorn::Result<()> {
    for n in 2..=6 {
        println!(
            "n={n}  ker W={}  ker V={}  ker Z={}",
            cobordism_kernel(&CobordismPresentation::w_n(n))?,
            cobordism_kernel(&CobordismPresentation::v_n(n))?,
            cobordism_kernel(&CobordismPresentation::z_n(n))?,
        );
    }
    let s = ksequence_rank_check(&CobordismPresentation::w_infinity(), &CobordismPresentation::v_n_after_w_infinity(5), 0)?;
    println!("rank check holds: {}", s.holds);
    Ok(())
}
