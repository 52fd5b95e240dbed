use diaglab::chain;
use diaglab::cli::run;
use diaglab::ratio::{rho_limit, CountingFormula};
use diaglab::realline::{expansion_table, nested_intervals, q01_list, Interval};

fn diaglab(args: &[&str]) -> (i32, String) {
    run(std::iter::once("diaglab").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let (code, out) = diaglab(args);
    assert_eq!(code, 0, "{args:?} failed: {out}");
    out
}

#[test]
fn dc_full_in_every_format() {
    assert_eq!(
        ok(&["dc", "--family", "full", "--kmax", "4"]),
        "1  1/2  = 1/2\n2  2/4  = 1/2\n3  3/8  = 3/8\n4  4/16  = 1/4\n"
    );
    assert_eq!(
        ok(&["dc", "--family", "full", "--kmax", "4", "--format", "csv"]),
        "k,length,rows,numerator,denominator\n1,1,2,1,2\n2,2,4,1,2\n3,3,8,3,8\n4,4,16,1,4\n"
    );
    assert_eq!(
        ok(&["--format", "record", "dc", "--family", "full", "--kmax", "4"]),
        "dc.1=1/2\ndc.2=1/2\ndc.3=3/8\ndc.4=1/4\n"
    );
    assert_eq!(ok(&["dc", "--family", "s2", "--kmax", "2"]), "1  1/2  = 1/2\n2  2/4  = 1/2\n");
}

#[test]
fn rank_and_unrank() {
    assert_eq!(ok(&["rank", "0,1"]), "2:0\n");
    assert_eq!(ok(&["rank", "0,1", "--format", "csv"]), "cardinality,index\n2,0\n");
    assert_eq!(ok(&["rank", "0,1", "--format", "record"]), "cardinality=2\nindex=0\n");
    assert_eq!(ok(&["unrank", "2:0"]), "{0,1}\n");
    assert_eq!(ok(&["unrank", "3:4", "--format", "csv"]), "cardinality,index,subset\n3,4,0;1;4\n");
    assert_eq!(ok(&["rank", "0,1,4"]), "3:4\n");
}

#[test]
fn enumerate_starts_with_empty_set() {
    assert_eq!(ok(&["enumerate", "--count", "4"]), "0 → ∅\n1 → {0}\n2 → {1}\n3 → {0,1}\n");
}

#[test]
fn powerset_tables() {
    let t = ok(&["powerset", "--proof", "3", "--i", "3"]);
    assert!(t.starts_with("0 → ∅\n1 → {0}\n2 → {1}\n3 → {0,1}\n4 → {2}\n5 → {0,2}\n"));
    assert_eq!(t.lines().count(), 8);
    let p2 = ok(&["powerset", "--proof", "2", "--m", "3", "--k", "2", "--format", "csv"]);
    assert_eq!(p2, "index,subset\n0,\n1,0\n2,0;1\n3,0;2\n4,1\n5,1;2\n6,2\n");
    let p1 = ok(&["powerset", "--proof", "1", "--i", "2", "--format", "record"]);
    assert_eq!(p1, "rank.1:0=0\nrank.1:1=1\nrank.2:0=0,1\n");
}

#[test]
fn rho_matches_library() {
    let csv = ok(&["rho", "--a", "floor:n/2", "--b", "floor:n/3", "--format", "csv"]);
    let report = rho_limit(&CountingFormula::floor(1, 0, 2), &CountingFormula::floor(1, 0, 3)).unwrap();
    assert_eq!(csv, report.to_csv());
    assert!(csv.ends_with("# classification=CONVERGES(3/2) method=SYMBOLIC\n"));
    let rec = ok(&["rho", "--a", "poly:0,1", "--b", "exp:2", "--format", "record"]);
    assert!(rec.contains("classification=ZERO\n"));
}

#[test]
fn chain_audit_golden() {
    let text = "~P <=> Q1 <=> Q2 => Q3 <=> P";
    let (code, out) = diaglab(&["chain", "audit", text]);
    assert_eq!(code, 0);
    assert!(out.starts_with("audit: fail\nverdict: INVALID_INTERNAL\nflags: Q1,Q2\n"));
    let record = ok(&["chain", "audit", text, "--format", "record"]);
    assert_eq!(record, chain::audit(&chain::parse(text).unwrap()).to_record());
    assert!(record.starts_with("audit=fail\nkind=INVALID_INTERNAL\nflags=Q1,Q2\n"));
    let csv = ok(&["chain", "classify", text, "--format", "csv"]);
    assert!(csv.starts_with("kind,INVALID_INTERNAL\nflag,Q1 reaches both P and ~P\n"));
}

#[test]
fn chain_parse_canonicalises() {
    assert_eq!(ok(&["chain", "parse", "~P<=>Q1  =>FALSUM"]), "~P <=> Q1 => FALSUM\n");
    assert_eq!(
        ok(&["chain", "parse", "A => P", "--format", "csv"]),
        "position,node,link\n0,A,=>\n1,P,\n"
    );
}

#[test]
fn q01_binary_matches_table() {
    let plain = ok(&["q01", "--count", "16", "--binary", "16"]);
    assert_eq!(plain, expansion_table(&q01_list(16), 16).unwrap());
    assert!(plain.contains("1/7 = 0.0010010010010010\n"));
    assert_eq!(ok(&["q01", "--count", "3", "--format", "csv"]), "index,numerator,denominator\n0,0,1\n1,1,2\n2,1,3\n");
}

#[test]
fn reorder_golden() {
    let args = ["reorder", "--diag", "1/3", "--window", "3", "--queries", "1/6,11/12,5/12"];
    assert_eq!(
        ok(&args),
        "diagonal      0.010\nantidiagonal  0.101 (2/3, never placed)\nplace    1/6 -> row 0\nplace    11/12 -> row 1\nexclude  5/12\ncover    queries [] rows [0, 1]\n"
    );
    let mut csv = args.to_vec();
    csv.extend(["--format", "csv"]);
    assert_eq!(ok(&csv), "query,row\n1/6,0\n11/12,1\n5/12,-\n");
    assert!(ok(&["reorder", "--diag", "1/3", "--window", "4"]).contains("cover    queries [] rows []\n"));
}

#[test]
fn nest_matches_library() {
    let csv = ok(&["nest", "--steps", "3", "--pool", "500", "--format", "csv"]);
    let run = nested_intervals(&q01_list(500), Interval::unit(), 3);
    assert_eq!(csv, run.to_csv());
    assert_eq!(
        ok(&["nest", "--steps", "2", "--format", "record"]),
        "steps=2\nstatus=completed\nstep.1=1/3,1/2\nstep.2=2/5,3/7\n"
    );
    assert!(ok(&["nest", "--steps", "4", "--pool", "2"]).ends_with("exhausted after 0 steps\n"));
}

#[test]
fn exit_codes() {
    let (code, out) = diaglab(&["rank", "3,1"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("error: "));
    assert_eq!(diaglab(&["unrank", "0:0"]).0, 1);
    assert_eq!(diaglab(&["rho", "--a", "exp:two", "--b", "exp:2"]).0, 1);
    assert_eq!(diaglab(&["chain", "classify", "P <=>"]).0, 1);
    assert_eq!(diaglab(&["reorder", "--diag", "3/2", "--window", "4"]).0, 1);

    let (code, out) = diaglab(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(out.contains("Usage:"));
    assert_eq!(diaglab(&["dc", "--family", "full", "--kmax", "4", "--bogus"]).0, 2);
    assert_eq!(diaglab(&["dc", "--family", "hex", "--kmax", "4"]).0, 2);
    assert_eq!(diaglab(&["powerset", "--proof", "4", "--i", "2"]).0, 2);
    assert_eq!(diaglab(&["--format", "json", "rank", "0"]).0, 2);
    assert_eq!(diaglab(&["--help"]).0, 0);
}
