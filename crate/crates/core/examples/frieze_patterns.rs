//! Conway-Coxeter friezes: the quiddity sequence of a triangulation, the
//! full frieze it generates, and the magma product on sequences.
//!
//! cargo run --example frieze_patterns -- [SEQUENCE]

use catalan_magma::bijection::{enumerate_native, universal_convert};
use catalan_magma::families::{frieze_expand, frieze_from_triangulation, FriezeSequence, Triangulation};
use catalan_magma::family::{family, FamilyId, Magma};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seq: Vec<u64> = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "2,2,1,4,1,2".into())
        .split(',')
        .map(str::parse)
        .collect::<Result<_, _>>()?;

    println!("frieze of {seq:?}:");
    for (i, row) in frieze_expand(&seq)?.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
        println!("{}{}", "  ".repeat(i % 2), cells.join(" "));
    }

    let frieze = family(FamilyId::F14).parse(&seq.iter().map(u64::to_string).collect::<Vec<_>>().join(","))?;
    let triang = universal_convert(family(FamilyId::F14), family(FamilyId::F9), &frieze)?;
    println!("\ntriangulation: {}", family(FamilyId::F9).render(&triang)?);

    let fan = FriezeSequence::parse("1,1,1")?;
    println!("\n111 * 111 = {}", fan.product(&fan).render());

    println!("\nnorm 4 from triangulations:");
    for t in enumerate_native::<Triangulation>(4)? {
        println!("  {:<12} {}", t.render(), frieze_from_triangulation(&t).render());
    }

    for bad in ["1,2,3", "2,2,2,2"] {
        let v: Vec<u64> = bad.split(',').map(|s| s.parse().unwrap()).collect();
        println!("{bad}: {}", frieze_expand(&v).err().map_or("ok".to_string(), |e| e.to_string()));
    }
    Ok(())
}
