//! Finite multiplication tables: which ones look free, which fail unique
//! factorization, and which loop forever when decomposed.
//!
//! cargo run --example magma_lab -- [a|b|c] [BOUND]

use catalan_magma::magma_lab::{classify, derive_norm, FiniteMagmaTable, Variant};

fn report(name: &str, t: &FiniteMagmaTable, bound: u64) {
    println!("== {name}\n{}", t.render());
    let c = classify(t, bound);
    let (uf, fd, irr) = c.summary();
    println!("unique factorization {uf}, finite decomposition {fd}, irreducibles {irr:?}");
    match derive_norm(t, bound) {
        Ok(n) => {
            let shown: Vec<String> = n.norms.iter().take(10).map(|(k, v)| format!("{k}:{v}")).collect();
            println!("norm {}  additive={} conflicts={}", shown.join(" "), n.is_additive(), n.conflicts.len());
        }
        Err(e) => println!("{e}"),
    }
    println!();
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let variants: Vec<Variant> = match args.next() {
        Some(v) => vec![v.parse()?],
        None => vec![Variant::A, Variant::B, Variant::C],
    };
    let bound = args.next().map(|s| s.parse()).transpose()?.unwrap_or(27);
    for v in variants {
        report(&format!("variant {v}"), &FiniteMagmaTable::diagonal(v, 6), bound);
    }

    let looping = FiniteMagmaTable::parse("2\n3 4\n5 2\n")?;
    report("hand-written table", &looping, 6);
    Ok(())
}
