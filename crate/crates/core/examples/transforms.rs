//! Operations that are not the magma product: the left Dyck product, mirror
//! images, and the opposite product, with the terms they correspond to.
//!
//! cargo run --example transforms

use catalan_magma::bijection::{decompose_native, opposite_product};
use catalan_magma::families::{cbt_reflect, dyck_left_product, dyck_peaks, dyck_reflect, BinaryTree, DyckPath};
use catalan_magma::family::{family, FamilyId, Magma};
use catalan_magma::term::Notation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = DyckPath::parse("uudd")?;
    let b = DyckPath::parse("ud")?;
    let show = |p: &DyckPath| format!("{:<10} {}", p.render(), decompose_native(p).render(Notation::Infix));

    let left = dyck_left_product(&a, &b);
    println!("a            {}", show(&a));
    println!("b            {}", show(&b));
    println!("a*b          {}", show(&a.product(&b)));
    println!("left(a,b)    {}", show(&left));
    println!("mirror(left) {}", show(&dyck_reflect(&left)));
    println!("peaks(left)  {}", dyck_peaks(&left));

    let f = family(FamilyId::F8);
    let op = opposite_product(f, &a.clone().into_element(), &b.clone().into_element())?;
    println!("a op b        {}", f.render(&op)?);

    let t = BinaryTree::parse("((*,*),*)")?;
    println!("\ntree {} mirrors to {}", t.render(), cbt_reflect(&t).render());
    println!("terms {} and {}", decompose_native(&t).render(Notation::Infix), decompose_native(&cbt_reflect(&t)).render(Notation::Infix));
    Ok(())
}
