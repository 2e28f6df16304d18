//! Terms of the free magma on several generators: notations, the
//! p-Catalan counts, and relabelling through the Cartesian family.
//!
//! cargo run --example term_notations

use catalan_magma::bijection::{compose, decompose, universal_convert_with};
use catalan_magma::families::CartesianFamily;
use catalan_magma::family::FamilyDescriptor;
use catalan_magma::numbers::p_catalan_number;
use catalan_magma::term::{enumerate_terms, GeneratorId, Notation, Term};

fn main() -> Result<(), catalan_magma::Error> {
    let t = Term::parse("((e1*e2)*(e3*e1))", Notation::Infix)?;
    for n in Notation::ALL {
        println!("{n:<8} {}", t.render_in(n, 3));
    }
    println!("reverse  {}", t.reverse().render_in(Notation::Infix, 3));

    println!("\nterms of norm n on p generators:");
    for p in 1..=3u64 {
        let counts: Vec<String> = (1..=6).map(|n| enumerate_terms(p as usize, n).map(|v| v.len().to_string())).collect::<Result<_, _>>()?;
        println!("  p={p}: {}   (closed form n=6: {})", counts.join(" "), p_catalan_number(p, 6));
    }

    let cart = CartesianFamily::new(3);
    let e = compose(&cart, &t)?;
    let g = |i| GeneratorId::new(i).unwrap();
    let swapped = universal_convert_with(&cart, &cart, &[g(2), g(3), g(1)], &e)?;
    println!("\n{}\nrelabelled by 1->2, 2->3, 3->1:\n{}", cart.render(&e)?, decompose(&cart, &swapped)?.render_in(Notation::Infix, 3));
    Ok(())
}
