use sun_systems::lemmas::{self, LemmaArgs, LemmaKind};

/// One parameter set each generator accepts.
fn sample(kind: LemmaKind) -> (u32, LemmaArgs) {
    let d = |ds: &[i64]| LemmaArgs {
        differences: ds.to_vec(),
        ..LemmaArgs::default()
    };
    match kind {
        LemmaKind::TwoInfDiff2 => (8, LemmaArgs::default()),
        LemmaKind::FourInfDiff2Mod12 => (12, LemmaArgs::default()),
        LemmaKind::FourInfDiff24 => (16, LemmaArgs::default()),
        LemmaKind::EightInfDiff1U3 => (12, LemmaArgs::default()),
        LemmaKind::ThreeInf1Half => (8, LemmaArgs::default()),
        LemmaKind::ThreeInf12Half => (12, LemmaArgs::default()),
        LemmaKind::FourInf1Half | LemmaKind::SixInf1Half => (12, LemmaArgs::default()),
        LemmaKind::SevenInf1Half => (12, LemmaArgs::default()),
        LemmaKind::OneInfSingleDiff => (18, d(&[1])),
        LemmaKind::FiveInfSingleDiff => (11, d(&[4])),
        LemmaKind::OneInfFiveDiffs => (13, d(&[2, 5, 6, 1, 3])),
        LemmaKind::TwoInfFourDiffs => (11, d(&[1, 3, 2, 4])),
        LemmaKind::ThreeInfThreeDiffs => (13, d(&[2, 5, 6])),
        LemmaKind::Leave => (
            29,
            LemmaArgs {
                s: 2,
                ..LemmaArgs::default()
            },
        ),
        LemmaKind::LeaveAlpha8S1 => (21, LemmaArgs::default()),
    }
}

fn main() {
    for kind in LemmaKind::ALL {
        let (u, args) = sample(kind);
        match lemmas::construct(kind, u, &args) {
            Ok(out) => {
                let ds: Vec<String> = out.graph.differences().iter().map(u32::to_string).collect();
                println!(
                    "{:<24} u = {u:>2}, t = {}, D = {{{}}}: {} blocks, {}",
                    kind.name(),
                    out.graph.t(),
                    ds.join(","),
                    out.blocks.len(),
                    if out.verify().ok {
                        "verified"
                    } else {
                        "NOT a partition"
                    }
                );
                if let Some(first) = out.blocks.first() {
                    println!("{:<24} first block {first}", "");
                }
            }
            Err(e) => println!("{:<24} u = {u:>2}: {e}", kind.name()),
        }
    }
}
