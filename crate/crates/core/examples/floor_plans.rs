//! Slicing floor plans: products, the canonical form that forgets wall
//! positions, and factorization at the corner room.
//!
//! cargo run --example floor_plans

use catalan_magma::bijection::{decompose_native, enumerate_native};
use catalan_magma::families::{FloorPlan, Room};
use catalan_magma::family::Magma;
use catalan_magma::term::Notation;

fn draw(p: &FloorPlan) -> String {
    let (w, h) = (p.width() as usize, p.height() as usize);
    let mut grid = vec![vec!['.'; w]; h];
    for (k, r) in p.rooms().iter().enumerate() {
        let c = char::from_digit(k as u32 % 36, 36).unwrap();
        for y in r.y0..r.y1 {
            for x in r.x0..r.x1 {
                grid[h - 1 - y as usize][x as usize] = c;
            }
        }
    }
    grid.into_iter().map(|row| format!("    {}\n", row.into_iter().collect::<String>())).collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = FloorPlan::generator();
    let one = e.product(&e);
    let two = one.product(&e);
    let p = one.product(&two);
    println!("{}\n{}term {}", p.render(), draw(&p), decompose_native(&p).render(Notation::Infix));

    let (l, r) = p.factorize().unwrap();
    println!("factors {} and {}", l.render(), r.render());

    let stretched = FloorPlan::from_rooms(
        10,
        4,
        vec![
            Room { x0: 0, x1: 3, y0: 2, y1: 4 },
            Room { x0: 0, x1: 10, y0: 0, y1: 2 },
            Room { x0: 3, x1: 10, y0: 2, y1: 4 },
        ],
    )?;
    println!("\nstretched input canonicalizes to {}", stretched.render());

    println!("\nall plans with three rooms:");
    for q in enumerate_native::<FloorPlan>(4)? {
        println!("  {}\n{}", q.render(), draw(&q));
    }
    Ok(())
}
