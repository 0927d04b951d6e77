//! Arithmetic in GF(p^k): literals, the canonical modulus, roots of unity and
//! root finding.
//!
//! ```text
//! cargo run --example field_arithmetic
//! ```

use cherednik::field::{make_field, min_ext_degree, poly_roots};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = make_field(5, 2)?;
    println!("GF(25) modulus (constant first): {:?}", ctx.modulus());

    let a = ctx.parse("2,1")?; // 2 + g
    let b = ctx.parse("4,3")?;
    println!("a = {}, b = {}", ctx.format(a), ctx.format(b));
    println!("a + b = {}", ctx.format(ctx.add(a, b)));
    println!("a * b = {}", ctx.format(ctx.mul(a, b)));
    println!("a / b = {}", ctx.format(ctx.div(a, b)?));
    println!("a^24 = {}", ctx.format(ctx.pow(a, 24)));

    for r in [2, 3, 4, 6] {
        let k = min_ext_degree(5, r)?;
        let f = make_field(5, k)?;
        let eps = f.primitive_root_of_unity(r as u32)?;
        println!("r = {r}: k = {k}, epsilon = {}", f.format(eps));
    }

    // z^2 - 2 has no root in F_5 but splits in GF(25).
    let f = [ctx.from_int(-2), ctx.zero(), ctx.one()];
    let roots: Vec<String> = poly_roots(&ctx, &f)?.into_iter().map(|z| ctx.format(z)).collect();
    println!("roots of z^2 - 2: {roots:?}");
    Ok(())
}
