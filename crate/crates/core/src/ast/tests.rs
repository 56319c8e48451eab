use super::paths::get_stmt;
use super::*;

pub(crate) const SAVE_BITMAP: &str = r#"
void saveBitmapToFile(Bitmap bmp, File file) {
    try {
        BufferedOutputStream bos = new BufferedOutputStream(new FileOutputStream(file));
        bmp.compress(Bitmap.CompressFormat.JPEG, 90, bos);
        bos.flush();
        bos.close();
        Log.d(TAG, "save to file succeeded");
    } catch (Exception e) {
        Log.e(TAG, "failed to save frame", e);
    }
}
"#;

fn p(src: &str) -> MethodUnit {
    parse_method(src).expect("parse")
}

fn paths(v: &[&[usize]]) -> StatementSet {
    v.iter().map(|p| StatementPath(p.to_vec())).collect()
}

#[test]
fn parses_empty_method() {
    let m = p("void f() { }");
    assert_eq!(m.header.name, "f");
    assert!(m.body.is_empty());
    assert!(m.header.params.is_empty());
}

#[test]
fn parses_save_bitmap_method() {
    let m = p(SAVE_BITMAP);
    assert_eq!(m.header.name, "saveBitmapToFile");
    assert_eq!(m.header.params.len(), 2);
    assert_eq!(m.body.len(), 1);
    let Stmt::TryCatch { try_body, catch_body, .. } = &m.body[0] else {
        panic!("expected try/catch");
    };
    assert_eq!(try_body.len(), 5);
    assert_eq!(catch_body.len(), 1);
    let Stmt::ExprStmt(Expr::MethodCall { callee, args }) = &try_body[1] else {
        panic!("expected compress call");
    };
    assert_eq!(callee, &["bmp", "compress"]);
    assert_eq!(args.len(), 3);
    assert_eq!(args[0], Expr::Qualified(vec!["Bitmap".into(), "CompressFormat".into(), "JPEG".into()]));
}

#[test]
fn print_parse_round_trip_is_stable() {
    for src in [
        "void f() { }",
        SAVE_BITMAP,
        "public static int max(int a, int b) { if (a > b) { return a; } else { return b; } }",
        "void g() { for (int i = 0; i < 10; i++) { sum = sum + i; } }",
        "void h() throws IOException, E2 { while (a && !b) { x = y[i].z; } }",
        "void k() { int a = -1; long b = 2L; float c = 1.5f; double d = 2.0; char e = 'q'; }",
        "void w() { obj.run(new Task(1, \"a  b\"), x % 2 == 0 || flag); ; }",
        "int q() { return (a + b) * c - -d; }",
    ] {
        let m1 = p(src);
        let printed = m1.pretty();
        let m2 = p(&printed);
        assert_eq!(m1, m2, "round trip changed structure for {src}");
        assert_eq!(printed, m2.pretty(), "printing is not a fixpoint for {src}");
    }
}

#[test]
fn syntax_errors_carry_position() {
    let err = parse_method("void f() { int = 3; }").unwrap_err();
    match err {
        AstError::Syntax { line, col, .. } => {
            assert_eq!(line, 1);
            assert!(col > 0);
        }
        other => panic!("expected syntax error, got {other:?}"),
    }
}

#[test]
fn duplicate_params_rejected() {
    assert!(parse_method("void f(int a, long a) { }").is_err());
}

#[test]
fn tree_round_trip_is_lossless() {
    for src in [
        SAVE_BITMAP,
        "void f() { if (c) { x(); y(); } }",
        "void g() { try { a(); } catch (E e) { b(); } finally { c(); } }",
        "void h() { for (; ; ) { ; } }",
        "private void k(T t) { t.a.b = items[i] + f().fld; }",
    ] {
        let m = p(src);
        let tree = m.to_tree();
        let back = MethodUnit::from_tree(&tree).expect("from_tree");
        assert_eq!(m, back, "tree round trip changed {src}");
    }
}

#[test]
fn universe_counts_match_spec_examples() {
    assert_eq!(statement_universe(&p("void f() { int a = 0; }")).len(), 1);
    assert_eq!(statement_universe(&p("void f() { if (c) { x(); y(); } }")).len(), 3);
    assert_eq!(
        statement_universe(&p("void f() { try { a(); } catch (E e) { b(); } }")).len(),
        3
    );
}

// Independent recursive walk used as the counting oracle.
fn count_stmts(body: &[Stmt]) -> usize {
    body.iter()
        .map(|s| 1 + s.child_bodies().into_iter().map(|b| count_stmts(b)).sum::<usize>())
        .sum()
}

#[test]
fn universe_cardinality_matches_recursive_walk() {
    for src in [
        SAVE_BITMAP,
        "void f() { if (a) { if (b) { x(); } } else { y(); } }",
        "void g() { while (c) { for (int i = 0; i < 2; i++) { t(); } } }",
        "void h() { }",
    ] {
        let m = p(src);
        assert_eq!(statement_universe(&m).len(), count_stmts(&m.body), "{src}");
    }
}

#[test]
fn restrict_all_is_identity_and_empty_is_empty() {
    let m = p(SAVE_BITMAP);
    let u = statement_universe(&m);
    assert_eq!(restrict(&m, &u).unwrap(), m);
    let empty = restrict(&m, &StatementSet::new()).unwrap();
    assert!(empty.body.is_empty());
    assert_eq!(empty.header, m.header);
}

#[test]
fn restrict_to_seed_statements_splices_shell() {
    // keeping only bos.close() and the catch-body log call drops the
    // try/catch shell and splices both calls to the top level
    let m = p(SAVE_BITMAP);
    let keep = paths(&[&[0, 3], &[0, 5]]);
    let view = restrict(&m, &keep).unwrap();
    let expected = p(
        "void saveBitmapToFile(Bitmap bmp, File file) {\n    bos.close();\n    Log.e(TAG, \"failed to save frame\", e);\n}",
    );
    assert_eq!(view, expected);
}

#[test]
fn restrict_kept_shell_without_elements_gets_empty_block() {
    let m = p("void f() { if (c) { x(); y(); } }");
    let view = restrict(&m, &paths(&[&[0]])).unwrap();
    assert_eq!(view, p("void f() { if (c) { } }"));

    let deep = p("void g() { try { a(); } catch (E e) { b(); } finally { c(); } }");
    let view = restrict(&deep, &paths(&[&[0], &[0, 1]])).unwrap();
    assert_eq!(view, p("void g() { try { } catch (E e) { b(); } finally { } }"));
}

#[test]
fn restrict_rejects_unknown_paths() {
    let m = p("void f() { x(); }");
    let err = restrict(&m, &paths(&[&[4]])).unwrap_err();
    assert!(matches!(err, AstError::Path { .. }));
}

#[test]
fn restrict_monotone_under_subset() {
    let m = p(SAVE_BITMAP);
    let u: Vec<StatementPath> = statement_universe(&m).into_iter().collect();
    let a: StatementSet = u.iter().step_by(2).cloned().collect();
    let b: StatementSet = u.iter().cloned().collect();
    let (va, _) = restrict_with_map(&m, &a).unwrap();
    let (vb, map_b) = restrict_with_map(&m, &b).unwrap();
    // every statement kept by A appears in B's view under the same origin
    for (origin, _) in restrict_with_map(&m, &a).unwrap().1 {
        assert!(map_b.iter().any(|(o, _)| *o == origin));
    }
    assert!(va.body.len() <= vb.body.len());
}

#[test]
fn restrict_map_addresses_view_statements() {
    let m = p(SAVE_BITMAP);
    let keep = paths(&[&[0], &[0, 2], &[0, 5]]);
    let (view, map) = restrict_with_map(&m, &keep).unwrap();
    assert_eq!(map.len(), 3);
    for (origin, view_path) in &map {
        let original = get_stmt(&m, origin).unwrap();
        let projected = get_stmt(&view, view_path).unwrap();
        assert_eq!(original.shell(), projected.shell());
    }
}

#[test]
fn nested_splice_lifts_grandchildren() {
    let m = p("void f() { if (a) { if (b) { x(); } } }");
    // drop both shells, keep x()
    let view = restrict(&m, &paths(&[&[0, 0, 0]])).unwrap();
    assert_eq!(view, p("void f() { x(); }"));
}

#[test]
fn token_count_counts_lexer_tokens() {
    // void f ( ) { } -> 6 tokens
    assert_eq!(p("void f() { }").token_count(), 6);
}
