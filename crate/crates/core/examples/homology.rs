//! Smith normal form on a plumbing's linking matrix.

use tight_brieskorn::homology::{self, PlumbingGraph};

fn main() -> tight_brieskorn::Result<()> {
    let g = PlumbingGraph::parse(
        "vertex c 0\nvertex a 2\nvertex b -3\nvertex d -11/2\nedge c a\nedge c b\nedge c d\n",
    )?;
    let integral = homology::expand_rational_framings(&g)?;
    let lk = homology::linking_matrix(&integral)?;
    let snf = homology::smith_normal_form(&lk);
    println!("diagonal {:?}", snf.diagonal().iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("H_1 = {}", homology::cokernel(&lk));
    assert!(snf.violation(&lk).is_none());
    Ok(())
}
