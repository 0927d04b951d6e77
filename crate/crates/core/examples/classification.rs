//! Full classification at a central character, with the working field chosen
//! automatically so that the classification polynomial splits.
//!
//! ```text
//! cargo run --example classification
//! ```

use cherednik::classify_all;
use cherednik::setup::{resolve, SetupSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = SetupSpec {
        p: 3,
        r: 2,
        t: 0,
        c: vec!["1".into()],
        a: Some("1".into()),
        b: Some("1".into()),
        ext_degree: None,
    };
    let setup = resolve(&spec)?;
    let ctx = setup.params.ctx();
    println!("working field GF({}^{})", ctx.p(), ctx.k());

    let report = classify_all(&setup.params, setup.a, setup.b)?;
    println!("complete: {}", report.complete);
    for class in &report.classes {
        println!(
            "{}: dim {}, irreducible {}, root multiplicity {:?}",
            class.label,
            class.rep.dim(),
            class.irreducible,
            class.root_multiplicity
        );
    }

    let nilpotent = classify_all(&setup.params, ctx.zero(), ctx.zero())?;
    for class in &nilpotent.classes {
        println!("{}: dim {}", class.label, class.rep.dim());
    }
    Ok(())
}
