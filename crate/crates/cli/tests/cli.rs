use std::process::{Command, Output};

use qfusion::{LaurentQPoly, SchurExpansion};
use serde_json::Value;

fn qfusion(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfusion"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qfusion(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn golden_text_outputs() {
    assert_eq!(
        stdout(&[
            "qfusion",
            "--factors",
            "2,1;2,1;2,1",
            "--n",
            "4",
            "--l",
            "2"
        ]),
        "q^7*s[3,3,2,1] + (q^6+q^7)*s[3,2,2,2]"
    );
    assert_eq!(
        stdout(&["reduce", "--partition", "12,2", "--n", "3", "--L", "5"]),
        "sign=+1 z=10 mu=6,4,4"
    );
    assert_eq!(
        stdout(&["reduce", "--partition", "4,2,2,1", "--n", "4", "--L", "6"]),
        "zero"
    );
    assert_eq!(
        stdout(&["theta", "--n", "2", "--l", "1", "--g", "3", "--q"]),
        "1+3q+3q^2+q^3"
    );
    assert_eq!(stdout(&["theta", "--n", "2", "--l", "2", "--g", "3"]), "36");
    assert_eq!(
        stdout(&["fusion", "--factors", "2,1;2,1;2,1", "--n", "4", "--l", "2"]),
        "s[3,3,2,1] + 2*s[3,2,2,2]"
    );
    assert_eq!(
        stdout(&["quotient", "--partition", "6,6,6,3,3,3", "--r", "3"]),
        "core=0 quotient=2,1;2,1;2,1"
    );
    assert_eq!(stdout(&["core", "--partition", "4,1", "--r", "2"]), "2,1");
    assert_eq!(
        stdout(&[
            "qlr",
            "--factors",
            "2,1;2,1;2,1",
            "--n",
            "4",
            "--nu",
            "3,2,2,2"
        ]),
        "q^5+2q^6+q^7"
    );
    assert_eq!(
        stdout(&["rkostka", "--lambda", "3,2,1", "--mu", "2,2,1,1", "--n", "3", "--l", "2"]),
        "q"
    );
    assert_eq!(stdout(&["kbar", "--N", "0", "--b", "0", "--L", "3"]), "1");
    assert_eq!(
        stdout(&["virasoro", "--m", "3", "--r", "1", "--s", "1", "--order", "7"]),
        "c=1/2 h=0 q^-h*chi=1+q^2+q^3+2q^4+2q^5+3q^6 + O(q^7)"
    );
    assert_eq!(
        stdout(&[
            "limit-check",
            "--a",
            "1",
            "--b",
            "1",
            "--L",
            "4",
            "--N",
            "8",
            "--order",
            "6"
        ]),
        "agree through q^6"
    );
    let spin = stdout(&[
        "ribbon-tableaux",
        "--partition",
        "8,7,6,6,1",
        "--r",
        "4",
        "--weight",
        "3,2,1,1",
        "--spin",
    ]);
    assert!(spin.contains("q^(9/2)"), "{spin}");
    let listing = stdout(&[
        "ribbon-tableaux",
        "--partition",
        "6,3",
        "--r",
        "3",
        "--max-entry",
        "2",
    ]);
    assert!(listing.lines().all(|l| l.starts_with("weight=")));
}

#[test]
fn exit_codes() {
    let usage = qfusion(&["reduce", "--partition", "3,5", "--n", "3", "--L", "5"]);
    assert_eq!(usage.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&usage.stderr).lines().count(), 1);
    assert_eq!(qfusion(&["nonsense"]).status.code(), Some(2));
    assert_eq!(qfusion(&["theta", "--n", "2"]).status.code(), Some(2));
    let domain = qfusion(&["llt", "--partition", "2", "--r", "3", "--n", "2"]);
    assert_eq!(domain.status.code(), Some(3));
    assert_eq!(String::from_utf8_lossy(&domain.stderr).lines().count(), 1);
    assert_eq!(
        qfusion(&[
            "limit-check",
            "--a",
            "2",
            "--b",
            "0",
            "--L",
            "4",
            "--N",
            "8",
            "--order",
            "6"
        ])
        .status
        .code(),
        Some(3)
    );
    assert_eq!(
        qfusion(&["kbar", "--N", "2", "--b", "5", "--L", "3"])
            .status
            .code(),
        Some(3)
    );
    assert!(qfusion(&["--help"]).status.success());
}

#[test]
fn json_reserializes_identically() {
    let runs: &[&[&str]] = &[
        &[
            "qfusion",
            "--factors",
            "2,1;2,1;2,1",
            "--n",
            "4",
            "--l",
            "2",
            "--format",
            "json",
        ],
        &[
            "llt",
            "--partition",
            "6,6,6,3,3,3",
            "--r",
            "3",
            "--n",
            "4",
            "--format",
            "json",
        ],
        &[
            "rkostka", "--mu", "2,2,1,1", "--n", "3", "--l", "2", "--format", "json",
        ],
        &[
            "reduce",
            "--partition",
            "11,3",
            "--n",
            "3",
            "--L",
            "5",
            "--format",
            "json",
        ],
        &[
            "quotient",
            "--partition",
            "6,6,6,3,3,3",
            "--r",
            "3",
            "--format",
            "json",
        ],
        &[
            "ribbon-tableaux",
            "--partition",
            "4,2",
            "--r",
            "2",
            "--max-entry",
            "2",
            "--format",
            "json",
        ],
        &[
            "virasoro", "--m", "4", "--r", "2", "--s", "1", "--order", "10", "--format", "json",
        ],
        &[
            "limit-check",
            "--a",
            "0",
            "--b",
            "0",
            "--L",
            "3",
            "--N",
            "8",
            "--order",
            "6",
            "--format",
            "json",
        ],
        &[
            "theta", "--n", "2", "--l", "2", "--g", "2", "--q", "--format", "json",
        ],
    ];
    for args in runs {
        let text = stdout(args);
        let value: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value.to_string(), text, "{args:?}");
    }
    let text = stdout(runs[0]);
    let e = SchurExpansion::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(e.to_json().to_string(), text);
    assert_eq!(e.to_string(), "q^7*s[3,3,2,1] + (q^6+q^7)*s[3,2,2,2]");
    let text = stdout(runs[8]);
    let p = LaurentQPoly::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(p.to_json().to_string(), text);
    assert_eq!(p, LaurentQPoly::from_coeffs(&[1, 2, 4, 2, 1]));
    let reduce: Value = serde_json::from_str(&stdout(runs[3])).unwrap();
    assert_eq!(reduce["sign"], -1);
    assert_eq!(reduce["z"], 8);
    assert_eq!(reduce["mu"], "6,4,4");
}
