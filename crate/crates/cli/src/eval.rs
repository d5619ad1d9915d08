//! Evaluation of parsed expressions into groups.

use grp_core::atlas;
use grp_core::lift::d8_group;
use grp_core::{AnyGroup, GroupError};
use thiserror::Error;

use crate::dsl::{Expr, ExprKind, Pos};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("{pos}: unknown builder `{name}`")]
    UnknownBuilder { name: String, pos: Pos },
    #[error("{pos}: `{name}` takes {expected} argument(s), found {found}")]
    BadArity {
        name: String,
        expected: &'static str,
        found: usize,
        pos: Pos,
    },
    #[error("{pos}: expected {expected}")]
    BadArgument { expected: String, pos: Pos },
    #[error("{pos}: {source}")]
    Group {
        #[source]
        source: GroupError,
        pos: Pos,
    },
}

/// Builder names with their argument lists, for help output.
pub const BUILDERS: &[(&str, &str)] = &[
    ("cyclic", "n"),
    ("sym", "n"),
    ("gl", "n, p"),
    ("sl", "n, p"),
    ("ut", "n, p"),
    ("s3mat", "p"),
    ("regular", "G"),
    ("metacyclic", "p, q"),
    ("extraspecial", "p, n [, plus|minus]"),
    ("bo", ""),
    ("natsd", "M, n"),
    ("gsp", "S, p, n"),
    ("qutrit", "p"),
    ("extsq", "p"),
    ("prop8", "p"),
    ("wr", "H, K"),
    ("d8", ""),
    ("direct", "A, B"),
];

type Res<T> = std::result::Result<T, EvalError>;

struct Call<'a> {
    name: &'a str,
    args: &'a [Expr],
    pos: Pos,
}

impl<'a> Call<'a> {
    fn arity(&self, allowed: &[usize], expected: &'static str) -> Res<()> {
        if allowed.contains(&self.args.len()) {
            Ok(())
        } else {
            Err(EvalError::BadArity {
                name: self.name.to_string(),
                expected,
                found: self.args.len(),
                pos: self.pos,
            })
        }
    }

    fn int(&self, i: usize) -> Res<u64> {
        match self.args[i].kind {
            ExprKind::Int(n) => Ok(n),
            _ => Err(EvalError::BadArgument {
                expected: format!("an integer as argument {} of `{}`", i + 1, self.name),
                pos: self.args[i].span.pos,
            }),
        }
    }

    fn small(&self, i: usize) -> Res<u32> {
        let n = self.int(i)?;
        u32::try_from(n).map_err(|_| EvalError::BadArgument {
            expected: format!("argument {} of `{}` below 2^32", i + 1, self.name),
            pos: self.args[i].span.pos,
        })
    }

    fn group(&self, i: usize, cap: usize) -> Res<AnyGroup> {
        evaluate_with(&self.args[i], cap)
    }

    fn lift<T>(&self, r: grp_core::Result<T>) -> Res<T> {
        r.map_err(|source| EvalError::Group {
            source,
            pos: self.pos,
        })
    }

    fn at_arg<T>(&self, i: usize, r: grp_core::Result<T>) -> Res<T> {
        r.map_err(|source| EvalError::Group {
            source,
            pos: self.args[i].span.pos,
        })
    }
}

pub fn evaluate(e: &Expr) -> Res<AnyGroup> {
    evaluate_with(e, grp_core::group::DEFAULT_CAP)
}

/// Evaluates `e`, giving every constructed group the enumeration cap `cap`.
pub fn evaluate_with(e: &Expr, cap: usize) -> Res<AnyGroup> {
    let (name, args) = match &e.kind {
        ExprKind::Call(name, args) => (name.as_str(), args.as_slice()),
        _ => {
            return Err(EvalError::BadArgument {
                expected: "a builder call".into(),
                pos: e.span.pos,
            })
        }
    };
    let c = Call {
        name,
        args,
        pos: e.span.pos,
    };
    let g: AnyGroup = match name {
        "cyclic" | "sym" => {
            c.arity(&[1], "1")?;
            let n = c.small(0)? as usize;
            let g = if name == "cyclic" { atlas::cyclic(n) } else { atlas::sym(n) };
            c.lift(g)?.into()
        }
        "gl" | "sl" | "ut" => {
            c.arity(&[2], "2")?;
            let (n, p) = (c.small(0)? as usize, c.small(1)?);
            let g = match name {
                "gl" => atlas::gl(n, p),
                "sl" => atlas::sl(n, p),
                _ => atlas::upper_triangular(n, p),
            };
            c.lift(g)?.into()
        }
        "s3mat" => {
            c.arity(&[1], "1")?;
            c.lift(atlas::s3_matrices(c.small(0)?))?.into()
        }
        "regular" => {
            c.arity(&[1], "1")?;
            let g = c.group(0, cap)?;
            let r = match &g {
                AnyGroup::Perm(h) => atlas::regular(h),
                AnyGroup::Matrix(h) => atlas::regular(h),
                AnyGroup::Class2(h) => atlas::regular(h),
            };
            c.lift(r)?.into()
        }
        "metacyclic" => {
            c.arity(&[2], "2")?;
            c.lift(atlas::metacyclic(c.small(0)?, c.small(1)?))?.into()
        }
        "extraspecial" => {
            c.arity(&[2, 3], "2 or 3")?;
            let (p, n) = (c.small(0)?, c.small(1)? as usize);
            let minus = match args.get(2).map(|a| &a.kind) {
                None => None,
                Some(ExprKind::Symbol(s)) if s == "plus" => Some(false),
                Some(ExprKind::Symbol(s)) if s == "minus" => Some(true),
                Some(_) => {
                    return Err(EvalError::BadArgument {
                        expected: "`plus` or `minus`".into(),
                        pos: args[2].span.pos,
                    })
                }
            };
            c.lift(atlas::extraspecial(p, n, minus))?.into()
        }
        "bo" => {
            c.arity(&[0], "0")?;
            c.lift(atlas::binary_octahedral())?.into()
        }
        "natsd" => {
            c.arity(&[2], "2")?;
            let m = c.group(0, cap)?;
            let m = c.at_arg(0, m.as_matrix().cloned())?;
            let n = c.small(1)? as usize;
            if m.identity().dim() != n {
                return Err(EvalError::BadArgument {
                    expected: format!("dimension {} of the matrix group", m.identity().dim()),
                    pos: args[1].span.pos,
                });
            }
            c.lift(atlas::natural_semidirect(&m))?.into()
        }
        "gsp" => {
            c.arity(&[3], "3")?;
            let s = c.group(0, cap)?;
            let s = c.at_arg(0, s.as_matrix().cloned())?;
            let (p, n) = (c.small(1)?, c.small(2)? as usize);
            c.lift(atlas::gsp_extension(&s, p, n))?.into()
        }
        "qutrit" => {
            c.arity(&[1], "1")?;
            c.lift(atlas::qutrit_normalizer(c.small(0)?))?.0.into()
        }
        "extsq" => {
            c.arity(&[1], "1")?;
            c.lift(atlas::exterior_square_group(c.small(0)?))?.into()
        }
        "prop8" => {
            c.arity(&[0, 1], "0 or 1")?;
            let p = if args.is_empty() { 7 } else { c.small(0)? };
            c.lift(atlas::prop8_group(p))?.group.into()
        }
        "wr" => {
            c.arity(&[2], "2")?;
            let h = c.group(0, cap)?;
            let k = c.group(1, cap)?;
            let h = c.at_arg(0, h.as_perm().cloned())?;
            let k = c.at_arg(1, k.as_perm().cloned())?;
            c.lift(atlas::wreath(&h, &k))?.into()
        }
        "d8" => {
            c.arity(&[0], "0")?;
            c.lift(d8_group())?.group.into()
        }
        "direct" => {
            c.arity(&[2], "2")?;
            let a = c.group(0, cap)?;
            let b = c.group(1, cap)?;
            match (&a, &b) {
                (AnyGroup::Perm(x), AnyGroup::Perm(y)) => c.lift(atlas::direct_perm(x, y))?.into(),
                (AnyGroup::Matrix(x), AnyGroup::Matrix(y)) => c.lift(atlas::direct_matrix(x, y))?.into(),
                _ => {
                    return c.lift(Err(GroupError::KindMismatch(format!(
                        "direct product of a {} group and a {} group",
                        a.kind(),
                        b.kind()
                    ))))
                }
            }
        }
        _ => {
            return Err(EvalError::UnknownBuilder {
                name: name.to_string(),
                pos: e.span.pos,
            })
        }
    };
    Ok(g.with_cap(cap))
}
