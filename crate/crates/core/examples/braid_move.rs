//! Builds the genus-one open book for a stabilized F, then runs one braid
//! move: slide, lantern, destabilize.

use tight_brieskorn::open_book::{braid_move, family_book, serialize_book, torus_bundle_monodromy};

fn main() -> tight_brieskorn::Result<()> {
    let book = family_book(1, 1, 0, true);
    println!("{} boundary components, chi = {}", book.page.boundary_count, book.euler_characteristic());
    println!("word: {}", book.word);

    let rep = torus_bundle_monodromy(&family_book(1, 1, 0, false))?;
    println!("walk product {}, conjugator {}", rep.product, rep.conjugator.map(|c| c.to_string()).unwrap_or_default());

    let base = book.region("base").expect("base region").start;
    let mv = braid_move(&book, base)?;
    for step in &mv.steps {
        println!("  {step}");
    }
    println!("after: {}  (holds: {})", mv.after.word, mv.holds());
    print!("{}", serialize_book(&mv.after));
    Ok(())
}
