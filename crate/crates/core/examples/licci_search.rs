// Searching for a chain of links ending in a complete intersection.

use liaison::linkage::{licci_search, LinkConfig};
use liaison::{parse_ideal, Ring};

pub fn run_example() -> liaison::Result<()> {
    let cfg = LinkConfig::default();
    let r = Ring::grevlex(&["x", "y", "z", "w"])?;
    let cubic = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r)?;
    let found = licci_search(&cubic, 2, 30, 0, &cfg);
    let chain = found.chain.expect("the twisted cubic is licci");
    println!("twisted cubic reaches {} in {} link(s)", chain.last(), chain.len());

    let r3 = Ring::grevlex(&["x", "y", "z"])?;
    let square = parse_ideal("x^2, x*y, x*z, y^2, y*z, z^2", &r3)?;
    let miss = licci_search(&square, 3, 10, 0, &cfg);
    println!(
        "(x,y,z)^2: {} after {} links (an empty result proves nothing)",
        if miss.chain.is_some() { "found" } else { "nothing" },
        miss.explored
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
