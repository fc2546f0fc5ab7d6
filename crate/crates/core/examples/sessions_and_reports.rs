// Session files, JSON reports and verification suites.

use liaison::bound::certified_upper_bound;
use liaison::parse_session;
use liaison::report::{certificate_value, Report};
use liaison::suites::run_verification_suite;

const SESSION: &str = "
# six quadrics in four variables
ring 32003 [x,y,z,w] grevlex;
ideal I = x^2, x*y, y^2, z^2, z*w, w^2;
";

pub fn run_example() -> liaison::Result<()> {
    let session = parse_session(SESSION)?;
    let i = session.ideal("I")?;
    let mut report = Report::new("bound I", None);
    if let Some(c) = certified_upper_bound(i)? {
        report.line(c.to_string());
        report.result = certificate_value(&c);
    }
    print!("{}", report.to_text());
    print!("{}", report.to_json());

    match parse_session("ring 32003 [x,y] grevlex;\nideal J = x^2 + y;") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("x^2 + y is not homogeneous"),
    }

    let suite = run_verification_suite("shift-bound", 1)?;
    print!("{}", suite.to_text());
    assert!(suite.ok);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
