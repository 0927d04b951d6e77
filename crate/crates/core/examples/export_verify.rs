//! JSON export, re-import and re-verification, including a corrupted copy.
//!
//! ```text
//! cargo run --example export_verify
//! ```

use std::sync::Arc;

use cherednik::reps::export::{from_json, to_json};
use cherednik::reps::{build_w, verify_relations};
use cherednik::{make_field, AlgebraParams, Planck};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = Arc::new(make_field(5, 1)?);
    let params = AlgebraParams::new(ctx.clone(), 2, Planck::One, vec![ctx.from_int(2)])?;
    let w = build_w(&params, 1);

    let text = serde_json::to_string_pretty(&to_json(&w, true))?;
    println!("{text}");

    let back = from_json(&serde_json::from_str(&text)?, None)?;
    println!("re-imported {} verifies: {}", back.label(), verify_relations(&back).all_passed());

    let mut doc = to_json(&w, true);
    doc.y[0][1] = "3".into();
    let broken = from_json(&doc, None)?;
    if let Some(f) = verify_relations(&broken).first_failure() {
        println!("corrupted copy fails {} at {:?}", f.name, f.first_failure);
    }
    Ok(())
}
