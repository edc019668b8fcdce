//! Function-body detection on a token stream.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::model::lexer::{Token, TokenKind};

const CONTROL_KEYWORDS: &[&str] = &[
    "if", "for", "while", "switch", "catch", "synchronized", "try", "do", "else", "return",
    "sizeof", "foreach", "using", "when", "with",
];
const TRAILING_QUALIFIERS: &[&str] = &["const", "noexcept", "override", "final", "mutable"];
const ACCESS_LABELS: &[&str] = &["public", "private", "protected"];

/// A function body and its header, as token indices into the stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct UnitTokens {
    /// First token of the declaration (annotations and modifiers included).
    pub first: usize,
    /// The closing `}` of the body.
    pub close: usize,
}

#[derive(Clone, Copy)]
enum Brace {
    Function(usize),
    Other,
}

/// Finds outermost function bodies. Nested functions (local classes, lambdas)
/// belong to the enclosing unit.
pub(crate) fn function_units(src: &str, tokens: &[Token]) -> Result<Vec<UnitTokens>> {
    let directive_lines = preprocessor_lines(src);
    let mut stack: Vec<Brace> = Vec::new();
    let mut in_function = 0usize;
    let mut units = Vec::new();

    for (i, t) in tokens.iter().enumerate() {
        if t.kind != TokenKind::Punct {
            continue;
        }
        match t.text(src) {
            "{" => {
                if in_function == 0 {
                    if let Some(first) = function_header(src, tokens, i, &directive_lines) {
                        stack.push(Brace::Function(first));
                        in_function += 1;
                        continue;
                    }
                }
                stack.push(Brace::Other);
            }
            "}" => match stack.pop() {
                Some(Brace::Function(first)) => {
                    in_function -= 1;
                    units.push(UnitTokens { first, close: i });
                }
                Some(Brace::Other) => {}
                None => {
                    return Err(Error::Syntax(format!("unmatched `}}` on line {}", t.line)));
                }
            },
            _ => {}
        }
    }
    if !stack.is_empty() {
        return Err(Error::Syntax("unclosed `{` at end of file".into()));
    }
    Ok(units)
}

fn preprocessor_lines(src: &str) -> HashSet<usize> {
    src.lines()
        .enumerate()
        .filter(|(_, l)| l.trim_start().starts_with('#'))
        .map(|(i, _)| i + 1)
        .collect()
}

/// If the `{` at `brace` opens a function body, returns the index of the
/// first token of the declaration.
fn function_header(
    src: &str,
    tokens: &[Token],
    brace: usize,
    directive_lines: &HashSet<usize>,
) -> Option<usize> {
    let text = |k: usize| tokens[k].text(src);
    let mut j = brace.checked_sub(1)?;

    // `throws A, b.C`
    let mut k = j;
    while k > 0 && (tokens[k].kind == TokenKind::Ident || matches!(text(k), "." | ",")) {
        if text(k) == "throws" {
            j = k.checked_sub(1)?;
            break;
        }
        k -= 1;
    }
    while tokens[j].kind == TokenKind::Ident && TRAILING_QUALIFIERS.contains(&text(j)) {
        j = j.checked_sub(1)?;
    }
    if text(j) != ")" {
        return None;
    }

    let mut depth = 0usize;
    let mut open = None;
    for k in (0..=j).rev() {
        match text(k) {
            ")" => depth += 1,
            "(" => {
                depth -= 1;
                if depth == 0 {
                    open = Some(k);
                    break;
                }
            }
            _ => {}
        }
    }
    let name = open?.checked_sub(1)?;
    if tokens[name].kind != TokenKind::Ident || CONTROL_KEYWORDS.contains(&text(name)) {
        return None;
    }
    if name > 0 && matches!(text(name - 1), "new" | "." | "->") {
        return None;
    }

    let mut first = name;
    while first > 0 {
        let prev = first - 1;
        let boundary = matches!(text(prev), ";" | "{" | "}")
            || directive_lines.contains(&tokens[prev].line)
            || (text(prev) == ":" && prev > 0 && ACCESS_LABELS.contains(&text(prev - 1)));
        if boundary {
            break;
        }
        first = prev;
    }
    Some(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::lexer::lex;

    fn unit_lines(src: &str) -> Vec<(usize, usize)> {
        let toks = lex(src).unwrap();
        function_units(src, &toks)
            .unwrap()
            .iter()
            .map(|u| (toks[u.first].line, toks[u.close].end_line))
            .collect()
    }

    #[test]
    fn java_methods_with_annotations_and_throws() {
        let src = "\
package a;
class A {
    private int x;

    @Override
    public void run() throws IOException, b.C {
        if (x > 0) {
            go();
        }
    }

    int get() { return x; }
}
";
        assert_eq!(unit_lines(src), vec![(5, 10), (12, 12)]);
    }

    #[test]
    fn control_blocks_and_anonymous_classes_are_not_units() {
        let src = "\
class B {
    Runnable r = new Runnable() {
        public void run() {}
    };
    static {
        init();
    }
}
";
        assert_eq!(unit_lines(src), vec![(3, 3)]);
    }

    #[test]
    fn cpp_free_functions_after_includes() {
        let src = "\
#include \"logger.hpp\"
#include <string>

namespace inv {
int count(const std::string& s) const {
    return 1;
}
}
";
        assert_eq!(unit_lines(src), vec![(5, 7)]);
    }

    #[test]
    fn access_labels_are_not_part_of_the_unit() {
        let src = "class C {\npublic:\n  void f() {\n  }\n};\n";
        assert_eq!(unit_lines(src), vec![(3, 4)]);
    }

    #[test]
    fn lambdas_inside_methods_stay_in_the_method() {
        let src = "class D {\n  void f() {\n    list.forEach(x -> {\n      g(x);\n    });\n  }\n}\n";
        assert_eq!(unit_lines(src), vec![(2, 6)]);
    }

    #[test]
    fn unbalanced_braces_are_errors() {
        let src = "class E { void f() { }";
        let toks = lex(src).unwrap();
        assert!(function_units(src, &toks).is_err());
        let src = "}";
        let toks = lex(src).unwrap();
        assert!(function_units(src, &toks).is_err());
    }
}
