use std::fmt;

/// Leaves of a motivic expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Atom {
    /// `Q{0}`
    Unit,
    /// `Q{i}`; `L` is `Tate(1)`.
    Tate(i64),
    /// `M(C)`
    MC,
    /// `M̄(C)` with `M(C) = Q{0} ⊕ M̄(C)`
    MbarC,
    /// `M₁(Jac(C))`, odd of rank `2g`
    M1Jac,
    /// `M(Jac(C)) = Sym*(M₁(Jac))`
    Jac,
    /// `M(BG_m) = Sym*(Q{1})`
    BGm,
    /// `M^c(BG_m) = ⊕_{i>=1} Q{-i}`
    BGmC,
    /// `M(P^k)`, stored by its dimension `k`.
    ProjSpace(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MotiveExpr {
    Atom(Atom),
    Sum(Vec<MotiveExpr>),
    Tensor(Vec<MotiveExpr>),
    Twist(Box<MotiveExpr>, i64),
    Sym(Box<MotiveExpr>, u32),
    SymStar(Box<MotiveExpr>),
    /// `Z(C, Q{i}) = ⊕_j M(C^{(j)}) ⊗ Q{ij}`
    ZetaTwist(i64),
}

impl MotiveExpr {
    pub fn unit() -> Self {
        MotiveExpr::Atom(Atom::Unit)
    }

    pub fn tate(i: i64) -> Self {
        MotiveExpr::Atom(Atom::Tate(i))
    }

    pub fn mc() -> Self {
        MotiveExpr::Atom(Atom::MC)
    }

    pub fn proj(dim: u32) -> Self {
        MotiveExpr::Atom(Atom::ProjSpace(dim))
    }

    /// Direct sum; a single summand is returned as is.
    pub fn sum(mut parts: Vec<MotiveExpr>) -> Self {
        if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            MotiveExpr::Sum(parts)
        }
    }

    /// Tensor product; unit factors are dropped and a single factor is returned as is.
    pub fn tensor(parts: Vec<MotiveExpr>) -> Self {
        let mut parts: Vec<_> = parts
            .into_iter()
            .filter(|p| *p != MotiveExpr::unit())
            .collect();
        match parts.len() {
            0 => MotiveExpr::unit(),
            1 => parts.pop().unwrap(),
            _ => MotiveExpr::Tensor(parts),
        }
    }

    /// `self{i}`, omitting zero twists.
    pub fn twist(self, i: i64) -> Self {
        if i == 0 {
            self
        } else {
            MotiveExpr::Twist(Box::new(self), i)
        }
    }

    pub fn sym(self, n: u32) -> Self {
        MotiveExpr::Sym(Box::new(self), n)
    }

    pub fn sym_star(self) -> Self {
        MotiveExpr::SymStar(Box::new(self))
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, MotiveExpr::Atom(_))
    }

    /// Number of nodes, for diagnostics and generators.
    pub fn size(&self) -> usize {
        match self {
            MotiveExpr::Atom(_) | MotiveExpr::ZetaTwist(_) => 1,
            MotiveExpr::Sum(v) | MotiveExpr::Tensor(v) => {
                1 + v.iter().map(Self::size).sum::<usize>()
            }
            MotiveExpr::Twist(e, _) | MotiveExpr::Sym(e, _) | MotiveExpr::SymStar(e) => {
                1 + e.size()
            }
        }
    }
}

impl From<Atom> for MotiveExpr {
    fn from(a: Atom) -> Self {
        MotiveExpr::Atom(a)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Unit => write!(f, "1"),
            Atom::Tate(1) => write!(f, "L"),
            Atom::Tate(i) => write!(f, "L^{i}"),
            Atom::MC => write!(f, "M(C)"),
            Atom::MbarC => write!(f, "Mbar(C)"),
            Atom::M1Jac => write!(f, "M1(Jac)"),
            Atom::Jac => write!(f, "Jac"),
            Atom::BGm => write!(f, "BGm"),
            Atom::BGmC => write!(f, "BGmC"),
            Atom::ProjSpace(k) => write!(f, "P({k})"),
        }
    }
}

/// Prints in the concrete grammar accepted by [`super::parse`]; nested sums
/// and products are parenthesised so that re-parsing gives the same tree.
impl fmt::Display for MotiveExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MotiveExpr::Atom(a) => write!(f, "{a}"),
            MotiveExpr::Sum(parts) => {
                if parts.is_empty() {
                    return write!(f, "0");
                }
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    match p {
                        MotiveExpr::Sum(_) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
            MotiveExpr::Tensor(parts) => {
                if parts.is_empty() {
                    return write!(f, "1");
                }
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " * ")?;
                    }
                    match p {
                        MotiveExpr::Sum(_) | MotiveExpr::Tensor(_) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
            MotiveExpr::Twist(e, i) => {
                if e.is_atom() {
                    write!(f, "{e}{{{i}}}")
                } else {
                    write!(f, "({e}){{{i}}}")
                }
            }
            MotiveExpr::Sym(e, n) => write!(f, "Sym^{n}({e})"),
            MotiveExpr::SymStar(e) => write!(f, "SymStar({e})"),
            MotiveExpr::ZetaTwist(i) => write!(f, "Z(C,L^{i})"),
        }
    }
}
