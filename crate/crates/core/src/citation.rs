//! Fixed enumeration of the results every computed value is traced back to.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Citation {
    LemmaMumford,
    LemmaUpper,
    EasyLower,
    LemmaCastelL,
    RemarkRckod,
    PropCastelGen,
    PropCastelP,
    RemarkCod2,
    PropLowerBound,
    CorLbSurf,
    ThreefoldBounds,
    TheoremDimension,
    CorPk,
    CorKP1,
    PropBetterB,
    TheoremThmB,
    CorHardCor,
    CorCeil,
    ExampleBilbao2,
    ExampleMan7,
    ExampleHyper,
    ExampleNew,
    ExampleExP,
    LemmaAmpleRestr,
    TheoremOneAmple,
    TheoremProperties,
    PropPropertiesCast,
    ExampleRange1,
    ExampleRange2,
    TheoremAlan,
    PropHartC,
    TheoremNewResult,
    TheoremEasy,
    CorChern1,
    PropKn1,
    RelationProdRel,
    PropExTh,
    CorExCor,
    TheoremMoreAdj,
    TheoremThreer1,
    TheoremCaset2,
}

impl Citation {
    pub const ALL: [Citation; 41] = [
        Citation::LemmaMumford,
        Citation::LemmaUpper,
        Citation::EasyLower,
        Citation::LemmaCastelL,
        Citation::RemarkRckod,
        Citation::PropCastelGen,
        Citation::PropCastelP,
        Citation::RemarkCod2,
        Citation::PropLowerBound,
        Citation::CorLbSurf,
        Citation::ThreefoldBounds,
        Citation::TheoremDimension,
        Citation::CorPk,
        Citation::CorKP1,
        Citation::PropBetterB,
        Citation::TheoremThmB,
        Citation::CorHardCor,
        Citation::CorCeil,
        Citation::ExampleBilbao2,
        Citation::ExampleMan7,
        Citation::ExampleHyper,
        Citation::ExampleNew,
        Citation::ExampleExP,
        Citation::LemmaAmpleRestr,
        Citation::TheoremOneAmple,
        Citation::TheoremProperties,
        Citation::PropPropertiesCast,
        Citation::ExampleRange1,
        Citation::ExampleRange2,
        Citation::TheoremAlan,
        Citation::PropHartC,
        Citation::TheoremNewResult,
        Citation::TheoremEasy,
        Citation::CorChern1,
        Citation::PropKn1,
        Citation::RelationProdRel,
        Citation::PropExTh,
        Citation::CorExCor,
        Citation::TheoremMoreAdj,
        Citation::TheoremThreer1,
        Citation::TheoremCaset2,
    ];

    /// Label of the cited result, e.g. `Theorem (Dimension)`.
    pub fn label(self) -> &'static str {
        use Citation::*;
        match self {
            LemmaMumford => "Lemma (Mumford)",
            LemmaUpper => "Lemma (upper)",
            EasyLower => "Inequality (easylower)",
            LemmaCastelL => "Lemma (CastelL)",
            RemarkRckod => "Remark (Rckod)",
            PropCastelGen => "Proposition (CastelGen)",
            PropCastelP => "Proposition (CastelP)",
            RemarkCod2 => "Remark (cod2)",
            PropLowerBound => "Proposition (lowerbound)",
            CorLbSurf => "Corollary (lbsurf)",
            ThreefoldBounds => "Threefold lower-degree bounds",
            TheoremDimension => "Theorem (Dimension)",
            CorPk => "Corollary (Pk)",
            CorKP1 => "Corollary (KP1)",
            PropBetterB => "Proposition (BetterB)",
            TheoremThmB => "Theorem (ThmB)",
            CorHardCor => "Corollary (HardCor)",
            CorCeil => "Corollary (ceil)",
            ExampleBilbao2 => "Example (Bilbao2)",
            ExampleMan7 => "Example (Man7)",
            ExampleHyper => "Example (Hyper)",
            ExampleNew => "Example (New)",
            ExampleExP => "Example (ExP)",
            LemmaAmpleRestr => "Lemma (AmpleRestr)",
            TheoremOneAmple => "Theorem (oneAmple)",
            TheoremProperties => "Theorem (Properties)",
            PropPropertiesCast => "Proposition (PropertiesCast)",
            ExampleRange1 => "Example (Range1)",
            ExampleRange2 => "Example (Range2)",
            TheoremAlan => "Theorem (Alan)",
            PropHartC => "Proposition (HartC)",
            TheoremNewResult => "Theorem (newResult)",
            TheoremEasy => "Theorem (Easy)",
            CorChern1 => "Corollary (Chern1)",
            PropKn1 => "Proposition (kn1)",
            RelationProdRel => "Relation (prodRel)",
            PropExTh => "Proposition (ExTh)",
            CorExCor => "Corollary (ExCor)",
            TheoremMoreAdj => "Theorem (MoreAdj)",
            TheoremThreer1 => "Theorem (threer1)",
            TheoremCaset2 => "Theorem (caset2)",
        }
    }

    pub fn from_label(label: &str) -> Option<Citation> {
        Citation::ALL.iter().copied().find(|c| c.label() == label)
    }

    /// The statement in formula form.
    pub fn statement(self) -> &'static str {
        use Citation::*;
        match self {
            LemmaMumford => "J_Y(delta) is spanned",
            LemmaUpper => "h0(tL) <= (td+n)/(t+n) C(t+n,n)",
            EasyLower => "h0(tL) >= C(t+n+1,n+1) for t < d",
            LemmaCastelL => "h0(tL) >= r C(n+t,n+1) + C(n+t,n) - r C(n+t-c-1,n+1) + (R-r) C(n+t-c-1,n)",
            RemarkRckod => "R = 0, c = 1 in general; R = 0, c = n when kod(X) >= 0",
            PropCastelGen => "simplified lower bound > (delta t+k)/(t+k) C(t+k,k) => h0(tL (x) J_Y) > 0",
            PropCastelP => "t > n(delta-1)/(r+1) - n + 1 => h0(tL - D) > 0",
            RemarkCod2 => "codimension-two positivity polynomial > 0",
            PropLowerBound => "((delta_N+N-1)...(delta_N+n-1)/(N...(n+1)) - n)/(delta_N-1) <= d",
            CorLbSurf => "delta_N^3 + 11 delta_N^2 + 46 delta_N + 96 <= 60 d",
            ThreefoldBounds => "delta_N^2 + 10 delta_N + 36 <= 20 d (N >= 5); delta_N^3 + 15 delta_N^2 + 86 delta_N + 240 <= 120 d (N >= 6)",
            TheoremDimension => "dim Z >= n-k-1, equality iff Z = P^{n-k-1} and Y is a complete intersection of n-k divisors in |L|",
            CorPk => "Y linear P^k: dim Z = n-k-1 iff (X,L) = (P^n, O(1))",
            CorKP1 => "Y a K(pi,1), k >= 2, n >= 3: dim Z >= n-k",
            PropBetterB => "h2(Y)_alg = 1 and dim Z >= n-k => dim Z >= n-k + k/(n-k) - 1; dim Z = n-k => n >= 2k",
            TheoremThmB => "h2j(Y)_alg = 1 for j <= n-k => Z = P^{n-k-1} with Y complete intersection, or dim Z >= k",
            CorHardCor => "Y linear P^k => Z = P^{n-k-1} with (X,L) = (P^n,O(1)), or dim Z >= k",
            CorCeil => "Y not a complete intersection, h2j(Y)_alg = 1 for j <= n-k => dim Z >= n/2",
            ExampleBilbao2 => "X = M x P^s: dim Z = n-k+s-1",
            ExampleMan7 => "n-fold in P^{2n-1} containing a linear P^{n-1}: d = ((s+1)^n - 1)/s, base degree 1",
            ExampleHyper => "hypersurface in P^{2k+1} containing a linear P^k with k-dimensional projection image",
            ExampleNew => "P(E + O(1)) over P^k: projection from the section P^k has lower-dimensional image",
            ExampleExP => "P2 x P2, L = O(1,1), D = O(2,0): delta = 6, tL - D effective iff t >= 2",
            LemmaAmpleRestr => "(delta L - D)|_D ample unless (X,L,D) = (P^n, O(1), O(delta))",
            TheoremOneAmple => "delta L - D is 1-ample unless (X,L,D) = (P^n, O(1), O(delta))",
            TheoremProperties => "delta > 1: |delta L - D| birational; very ample if n >= r+2",
            PropPropertiesCast => "(delta-q+1)L - D: very ample if n >= r+2; birational if n <= r+1 unless q = r+1 and (n = r+1 or delta = r+2)",
            ExampleRange1 => "P1 x P^{n-1}, L = O(1,1), D = O(2,1): d = n, delta = n+1, h0(L) = 2n, q = r+1",
            ExampleRange2 => "P(O^{n-1} + O(1)) over P1: d = n+1, delta = n+2, h0(L) = 2n+1, q = r+1",
            TheoremAlan => "Y linear P^k, k >= 2, dim Z = n-k => X is a hypersurface in P^{n+1}",
            PropHartC => "assuming Hartshorne's conjecture, X not a complete intersection: dim Z >= n-k + k/3 - 1",
            TheoremNewResult => "P^{n-1}-bundle over a curve: dim Z < n iff Y is a section (k = 1) or (X,L) = (P^{n-1} x P1, O(1,1))",
            TheoremEasy => "K_X + (n-1)L spanned unless P^n, a quadric, or a scroll over a curve",
            CorChern1 => "c1(N_{Y/X}) <= n-2-k",
            PropKn1 => "s >= -1; d = ((s+1)^n - 1)/s for s >= 1 and d = n for s = 0",
            RelationProdRel => "fiber degree * base degree = (s+1)^{n-1}",
            PropExTh => "s >= 0, fiber degree 1 => (X,L) = (P(O(s+1) + O(1)), xi)",
            CorExCor => "s = 0 => (X,L) = (P^{n-1} x P1, O(1,1))",
            TheoremMoreAdj => "s >= 1, fiber degree >= 2, n >= 3: first reduction exists; nontrivial only if s = 1 and P is the exceptional divisor",
            TheoremThreer1 => "n = 3, s = 1, fiber degree >= 2 => fiber degree 4, blowup of a complete intersection of three quadrics in P6",
            TheoremCaset2 => "n = 3, s >= 2 => fiber degree 2 does not occur",
        }
    }
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn labels_are_unique_and_nonempty() {
        let labels: BTreeSet<_> = Citation::ALL.iter().map(|c| c.label()).collect();
        assert_eq!(labels.len(), Citation::ALL.len());
        assert!(Citation::ALL.iter().all(|c| !c.statement().is_empty()));
        for c in Citation::ALL {
            assert_eq!(Citation::from_label(c.label()), Some(c));
        }
    }
}
