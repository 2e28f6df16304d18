//! Lists every family, checks its counts against the Catalan numbers, and
//! prints the elements of a chosen norm.
//!
//! cargo run --example enumerate_families -- [NORM]

use catalan_magma::bijection::enumerate;
use catalan_magma::family::{family, FamilyId};
use catalan_magma::numbers::catalan_number;

fn main() -> Result<(), catalan_magma::Error> {
    let norm: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);

    println!("{:<5} {:<11} {:>8} {:>8}", "id", "alias", "count", "C(n-1)");
    for id in FamilyId::ALL {
        let all = enumerate(family(id), norm)?;
        println!("{:<5} {:<11} {:>8} {:>8}", id.to_string(), id.alias(), all.len(), catalan_number(norm as u64 - 1));
    }

    for id in [FamilyId::F8, FamilyId::F9, FamilyId::F13] {
        let f = family(id);
        println!("\n{} ({}), norm {norm}:", id, id.title());
        for e in enumerate(f, norm)?.iter().take(14) {
            println!("  {}", f.render(e)?);
        }
    }
    Ok(())
}
