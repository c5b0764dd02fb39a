use uqsl2r::modealg::Kind;
use uqsl2r::rfactor::composed_residue_check;
fn main() {
    for kind in [Kind::E, Kind::F] {
        for n in 2u32..=2 {
            let f = composed_residue_check(kind, n, 2);
            println!("kind {kind:?} n={n}: {} failures", f.len());
            for line in f.iter().take(6) {
                println!("   {line}");
            }
        }
    }
}
