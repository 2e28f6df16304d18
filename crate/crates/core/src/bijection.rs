//! Decomposition into terms, recomposition, and the universal bijection.

use crate::family::{Element, FamilyDescriptor, Magma};
use crate::term::{enumerate_terms_capped, GeneratorId, Term, DEFAULT_CAP};
use crate::Error;

/// Factorizes `e` down to generators.
///
/// Single-generator families only report irreducibility, so leaves use the
/// first generator unless the element equals another registered generator.
pub fn decompose(f: &dyn FamilyDescriptor, e: &Element) -> Result<Term, Error> {
    f.check(e)?;
    let gens: Vec<Element> = (1..=f.generator_count() as u32)
        .map(|i| f.generator(GeneratorId::new(i).expect("index is positive")))
        .collect::<Result<_, _>>()?;
    let leaf = |x: &Element| -> Result<Term, Error> {
        let i = gens.iter().position(|g| g == x).ok_or_else(|| Error::Factorization {
            family: f.id(),
            repr: f.render(x).unwrap_or_default(),
        })?;
        Ok(Term::Leaf(GeneratorId::new(i as u32 + 1).expect("index is positive")))
    };
    // Explicit stack; terms of large norm would otherwise recurse deeply.
    enum Step {
        Visit(Element),
        Join,
    }
    let mut stack = vec![Step::Visit(e.clone())];
    let mut done: Vec<Term> = Vec::new();
    while let Some(step) = stack.pop() {
        match step {
            Step::Visit(x) => match f.factorize(&x)? {
                Some((a, b)) => {
                    stack.push(Step::Join);
                    stack.push(Step::Visit(b));
                    stack.push(Step::Visit(a));
                }
                None => done.push(leaf(&x)?),
            },
            Step::Join => {
                let b = done.pop().expect("right factor decomposed");
                let a = done.pop().expect("left factor decomposed");
                done.push(Term::product(a, b));
            }
        }
    }
    Ok(done.pop().expect("one term remains"))
}

/// Evaluates `t` in `f`: leaves become generators, nodes become products.
pub fn compose(f: &dyn FamilyDescriptor, t: &Term) -> Result<Element, Error> {
    enum Step<'a> {
        Visit(&'a Term),
        Join,
    }
    let mut stack = vec![Step::Visit(t)];
    let mut done: Vec<Element> = Vec::new();
    while let Some(step) = stack.pop() {
        match step {
            Step::Visit(Term::Leaf(g)) => done.push(f.generator(*g)?),
            Step::Visit(Term::Node(a, b)) => {
                stack.push(Step::Join);
                stack.push(Step::Visit(b));
                stack.push(Step::Visit(a));
            }
            Step::Join => {
                let b = done.pop().expect("right factor composed");
                let a = done.pop().expect("left factor composed");
                done.push(f.product(&a, &b)?);
            }
        }
    }
    Ok(done.pop().expect("one element remains"))
}

/// The unique magma isomorphism `src -> dst` fixing generator order.
pub fn universal_convert(
    src: &dyn FamilyDescriptor,
    dst: &dyn FamilyDescriptor,
    e: &Element,
) -> Result<Element, Error> {
    let identity: Vec<GeneratorId> =
        (1..=src.generator_count() as u32).filter_map(GeneratorId::new).collect();
    universal_convert_with(src, dst, &identity, e)
}

/// Isomorphism sending generator `i` of `src` to generator `sigma[i - 1]` of `dst`.
pub fn universal_convert_with(
    src: &dyn FamilyDescriptor,
    dst: &dyn FamilyDescriptor,
    sigma: &[GeneratorId],
    e: &Element,
) -> Result<Element, Error> {
    let p = src.generator_count();
    if p != dst.generator_count() {
        return Err(Error::GeneratorCountMismatch {
            src: src.id(),
            src_count: p,
            dst: dst.id(),
            dst_count: dst.generator_count(),
        });
    }
    let mut seen = vec![false; p];
    let is_bijection = sigma.len() == p
        && sigma.iter().all(|g| {
            let i = g.index() as usize;
            (1..=p).contains(&i) && !std::mem::replace(&mut seen[i - 1], true)
        });
    if !is_bijection {
        return Err(Error::BadGeneratorMap(p));
    }
    let t = decompose(src, e)?.relabel(&|g: GeneratorId| sigma[g.index() as usize - 1]);
    compose(dst, &t)
}

/// The product of the opposite magma: arguments swapped.
pub fn opposite_product(f: &dyn FamilyDescriptor, a: &Element, b: &Element) -> Result<Element, Error> {
    f.product(b, a)
}

/// All elements of norm `n`, sorted by rendered text.
pub fn enumerate(f: &dyn FamilyDescriptor, n: usize) -> Result<Vec<Element>, Error> {
    enumerate_capped(f, n, DEFAULT_CAP)
}

pub fn enumerate_capped(f: &dyn FamilyDescriptor, n: usize, cap: usize) -> Result<Vec<Element>, Error> {
    let terms = enumerate_terms_capped(f.generator_count(), n, cap)?;
    let mut keyed = terms
        .iter()
        .map(|t| {
            let e = compose(f, t)?;
            Ok((f.render(&e)?, e))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, e)| e).collect())
}

/// Typed decomposition for a native family.
pub fn decompose_native<M: Magma>(x: &M) -> Term {
    match x.factorize() {
        Some((a, b)) => Term::product(decompose_native(&a), decompose_native(&b)),
        None => Term::leaf(),
    }
}

/// Typed composition for a native family.
pub fn compose_native<M: Magma>(t: &Term) -> M {
    match t {
        Term::Leaf(_) => M::generator(),
        Term::Node(a, b) => compose_native::<M>(a).product(&compose_native::<M>(b)),
    }
}

/// Typed counterpart of [`universal_convert`] between single-generator families.
pub fn convert_native<A: Magma, B: Magma>(x: &A) -> B {
    compose_native(&decompose_native(x))
}

/// Typed enumeration of norm `n`, sorted by rendered text.
pub fn enumerate_native<M: Magma>(n: usize) -> Result<Vec<M>, Error> {
    let mut out: Vec<(String, M)> = enumerate_terms_capped(1, n, DEFAULT_CAP)?
        .iter()
        .map(|t| {
            let x = compose_native::<M>(t);
            (x.render(), x)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, x)| x).collect())
}
