//! Write a certificate, read it back, and see a corrupted copy rejected.

use sun_systems::{construct_3ss, Certificate};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let system = construct_3ss(16)?;
    let text = Certificate::from_decomposition(&system).to_json();
    let path = std::env::temp_dir().join("sunsys-k16.json");
    std::fs::write(&path, &text)?;
    println!("wrote {} ({} bytes)", path.display(), text.len());

    let back = Certificate::from_json(&std::fs::read_to_string(&path)?)?;
    assert_eq!(back.to_json(), text);
    println!("read back: {}", back.verify()?.summary());

    let mut broken = back.clone();
    broken.blocks[0].swap(3, 4);
    let report = broken.verify()?;
    println!(
        "pendants swapped in one block: ok = {}, {}",
        report.ok,
        report.summary()
    );
    Ok(())
}
