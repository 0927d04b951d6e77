//! Normal forms `x^i y^j s^l` and centrality checks in H_{t,c}.
//!
//! ```text
//! cargo run --example pbw_rewriting
//! ```

use std::sync::Arc;

use cherednik::algebra::Monomial;
use cherednik::{make_field, AlgebraParams, PbwAlgebra, Planck};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = Arc::new(make_field(3, 1)?);
    let params = AlgebraParams::new(ctx.clone(), 2, Planck::One, vec![ctx.one()])?;
    let alg = PbwAlgebra::new(params);

    for word in ["y*x", "y*x^2", "y^2*x^3", "s*x*s"] {
        let e = alg.parse(word)?;
        println!("{word:>8} = {}", alg.format(&e));
    }

    let (_, stats) = alg.multiply_counted(&alg.parse("y^6")?, &alg.parse("x^6")?)?;
    println!("y^6 x^6 used {} rewrite steps", stats.yx_rule_applications);

    let h = alg.element_h();
    println!("h = {}", alg.format(&h));
    println!("[h, x] = {}", alg.format(&alg.commutator(&h, &alg.x())?));

    for e in [alg.monomial(Monomial::new(6, 0, 0), ctx.one()), alg.x()] {
        let check = alg.check_central(&e)?;
        match check.witness {
            None => println!("{} is central", alg.format(&e)),
            Some((g, comm)) => println!("{} is not central: [e, {g}] = {}", alg.format(&e), alg.format(&comm)),
        }
    }
    Ok(())
}
