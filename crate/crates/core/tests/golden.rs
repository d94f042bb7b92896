use std::fs;
use std::path::Path;

struct Case {
    name: String,
    args: Vec<String>,
    code: i32,
    stdout: String,
}

fn load_cases() -> Vec<Case> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut paths: Vec<_> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    paths
        .into_iter()
        .filter(|p| p.extension().is_some_and(|e| e == "golden"))
        .map(|p| {
            let text = fs::read_to_string(&p).unwrap();
            let (head, stdout) = text.split_once("---\n").expect("missing separator");
            let mut lines = head.lines();
            let args = lines.next().unwrap().strip_prefix("args: ").unwrap();
            let code = lines.next().unwrap().strip_prefix("exit: ").unwrap().parse().unwrap();
            Case {
                name: p.file_stem().unwrap().to_string_lossy().into_owned(),
                args: args.split_whitespace().map(str::to_string).collect(),
                code,
                stdout: stdout.to_string(),
            }
        })
        .collect()
}

#[test]
fn golden_outputs_match() {
    // paths inside the files are relative to the crate root
    std::env::set_current_dir(env!("CARGO_MANIFEST_DIR")).unwrap();
    let cases = load_cases();
    assert!(cases.len() >= 20);
    for c in cases {
        let out = gogchi::cli::run(std::iter::once("gogchi".to_string()).chain(c.args.iter().cloned()));
        assert_eq!(out.code, c.code, "{}: stderr {}", c.name, out.stderr);
        assert_eq!(out.stdout, c.stdout, "{}", c.name);
    }
}
