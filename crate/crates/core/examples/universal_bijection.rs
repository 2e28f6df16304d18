//! Sends one element through every family by way of its magma term, then
//! follows a chain of conversions back to where it started.
//!
//! cargo run --example universal_bijection -- [DYCK_WORD]

use catalan_magma::bijection::{decompose, universal_convert};
use catalan_magma::family::{family, FamilyId};
use catalan_magma::term::Notation;

fn main() -> Result<(), catalan_magma::Error> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "uduudd".into());
    let dyck = family(FamilyId::F8);
    let path = dyck.parse(&word)?;
    let term = decompose(dyck, &path)?;
    println!("{word} = {}  (norm {})\n", term.render(Notation::Infix), term.norm());

    for id in FamilyId::ALL {
        let f = family(id);
        let image = universal_convert(dyck, f, &path)?;
        println!("{:<4} {:<11} {}", id.to_string(), id.alias(), f.render(&image)?);
    }

    let chain = [FamilyId::F8, FamilyId::F2, FamilyId::F9, FamilyId::F14, FamilyId::F12, FamilyId::F8];
    let mut current = path.clone();
    print!("\nchain:");
    for pair in chain.windows(2) {
        current = universal_convert(family(pair[0]), family(pair[1]), &current)?;
        print!(" -> {}", family(pair[1]).render(&current)?);
    }
    println!();
    assert_eq!(current, path);
    Ok(())
}
