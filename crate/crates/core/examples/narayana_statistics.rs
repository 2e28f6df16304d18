//! The Narayana refinement of the Catalan numbers, read off the magma term
//! of each element.
//!
//! cargo run --example narayana_statistics -- [FAMILY] [NORM]

use catalan_magma::family::{family, FamilyId};
use catalan_magma::numbers::narayana_value;
use catalan_magma::stats::narayana_histogram;

fn main() -> Result<(), catalan_magma::Error> {
    let mut args = std::env::args().skip(1);
    let id: FamilyId = args.next().as_deref().unwrap_or("dyck").parse()?;
    let norm: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);

    println!("{id} ({}), right-leaf counts:", id.title());
    for n in 2..=norm {
        let h = narayana_histogram(family(id), n)?;
        let row: Vec<String> = h.counts.values().map(u64::to_string).collect();
        let closed: Vec<String> = (1..n as u64).map(|k| narayana_value(n as u64, k).to_string()).collect();
        println!(
            "  n={n:<2} {:<28} closed form {:<28} symmetric={}",
            row.join(" "),
            closed.join(" "),
            h.is_symmetric()
        );
        assert!(h.matches_closed_form());
    }
    Ok(())
}
