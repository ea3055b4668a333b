//! Built-in task files covering the whole algebra zoo.
//!
//! Both suites share one template; `paper-quick` lowers the search bounds,
//! the growth horizon and the number of sampled identities.

pub const SUITES: &[&str] = &["paper-all", "paper-quick"];

const TEMPLATE: &str = r#"
# algebras
zoo R = Rf(c^2)
zoo Mq2 = Mq2(2)
zoo Mq3 = Mq2(3)
zoo MJ = MJ2
zoo P1 = P(c^2, c)
zoo P2 = P(c^3, c^2)
zoo P3 = P(c, 1)
zoo P4 = P(1, 0)
zoo P5 = P(c^2, 1)
zoo P6 = P(c^3, c)
zoo G2 = Gf(c^2)
zoo G3 = Gf(c^3)
zoo G32 = Gf(c^3 + c^2)
zoo G7 = G(c, c, -(u*inv(2) + a))
zoo NW = ISPEnegWeyl(c)
zoo PL = ISPEplane(3, commuting, 0)
zoo PA = ISPEplane(-1, anti, c)
zoo PB = ISPEplane(3, anti, 0)
zoo S = ISPEweyl

# presentations hold in every form
check relations R
check relations Mq2
check relations Mq3
check relations MJ
check relations MJ.u
check relations P1
check relations P1.pres1
check relations P1.ispe
check relations P1.loc
check relations P2
check relations P2.pres1
check relations P2.ispe
check relations P3
check relations P3.pres1
check relations P3.ispe
check relations P4
check relations P4.pres1
check relations P4.ispe
check relations G2
check relations G2.abcd
check relations G3
check relations G3.abcd
check relations G32
check relations G32.abcd
check relations G7
check relations NW
check relations PL
check relations PA
check relations PB
check relations S

# central elements
check central G2.z in G2
check central G3.z in G3
check central G32.z in G32
check central Mq2.detq in Mq2
check central Mq3.detq in Mq3
check central MJ.detJ in MJ
check central MJ.z in MJ.u
check central 2*(c*b + c*a) + u*c in G7
check central P1.v in P1.loc
check central P2.v in P2.loc

# determinant under the change of presentation u = d - a
check relations MJ.to_u with a*d - c*b - c*d + (c*b + (c - (d - a))*a - a^2) = 0
check relations MJ.from_u with a*(u + a) - c*b - c*(u + a) + (c*b + (c - u)*a - a^2) = 0
check inverse-pair MJ.to_u MJ.from_u

# involutions
check involution tau on Mq2
check involution tau on Mq3
check involution tau on MJ
check involution MJ.u.tau
check involution tau on G2
check involution tau on G3
check involution tau on G32
check involution tau on G7
check involution tau on NW
check involution tau on PL
check involution tau on PA
check involution tau on PB
check involution tau on S
check involution P1.ispe.tau
check ispe NW
check ispe PL
check ispe PA
check ispe S
check ispe P1.ispe

# birational maps to Weyl algebras
check relations G2.to_weyl
check inverse-pair G2.to_weyl G2.from_weyl
check relations G3.to_weyl
check inverse-pair G3.to_weyl G3.from_weyl
check relations S.to_weyl
check inverse-pair S.to_weyl S.from_weyl

# closed forms of the Jordanian extension and the comparison with M_J(2)
check relations G3 with b*c = c*b + c*(2*c^2 + u + 2*a); b*u = u*b + u*(2*c^2 + u + 2*a); b*a = (a + 2*c^2)*b + (2*c^2 - u)*a
check inner-auto b by c^2 in G3.loc
check inner-auto b by c in G2.loc
map j : G2 -> MJ.u
map k : MJ.u -> G2
check relations j
check relations k
check inverse-pair j k
check tower-wellformed G2 [samples=0]
check tower-wellformed G3 [samples=0]
check tower-wellformed G32 [samples=0]

# bounded centers
check center-search R [skew=$rskew, coeff=$rskew, expect=1]
check center-search G2 [skew=2, coeff=$gcoeff, expect=1; G2.z]
check center-search Mq2 [skew=2, coeff=2, expect=1; Mq2.detq]
check center-search P1.loc [skew=$pskew, coeff=$pskew, expect=$vpowers]

# local reduction against inner powers of sigma
check local-reduction c^2, c [expect=yes]
check local-reduction c^2, 1 [expect=no]
check local-reduction c^3, c^2 [expect=yes]
check local-reduction c^3, c [expect=no]
check inner-power-scan u in P1.pres1loc [n=4, exp=4, expect=found]
check inner-power-scan u in P5.pres1loc [n=4, exp=4, expect=none]
check inner-power-scan u in P2.pres1loc [n=4, exp=4, expect=found]
check inner-power-scan u in P6.pres1loc [n=4, exp=4, expect=none]
check inner-der d by a in P1.ispe
check inner-der d by a in P2.ispe
check normal u in P1
check normal c in G2 [degree=1]

# growth
check growth P1 [n=$pgrowth, expect=3]
check growth P2 [n=$pgrowth, expect=3]
check growth G2 [n=$ggrowth, expect=4]
check growth G3 [n=$ggrowth, expect=4]

# quotients of P(c^2, c)
base a u
tower K = base
map pi1 : P1 -> R with u=0
map s1 : R -> P1
check quotient P1 by u via pi1 s1
map pi2 : P1 -> K with c=0
map s2 : K -> P1
check quotient P1 by c via pi2 s2
map pi3 : P1 -> R with u=c
map s3 : R -> P1
check quotient P1 by u - c via pi3 s3

# derivations of powers of c in R_f
check relations R with a*c^2 = c^2*a + 2*c^3; a*c^5 = c^5*a + 5*c^6; a*c^10 = c^10*a + 10*c^11

# sampled ring axioms
check tower-wellformed R [samples=$samples, pairs=$pairs]
check tower-wellformed Mq2 [samples=$samples, pairs=$pairs]
check tower-wellformed Mq3 [samples=$samples, pairs=$pairs]
check tower-wellformed MJ [samples=$samples, pairs=$pairs]
check tower-wellformed MJ.u [samples=$samples, pairs=$pairs]
check tower-wellformed P1 [samples=$samples, pairs=$pairs]
check tower-wellformed P2 [samples=$samples, pairs=$pairs]
check tower-wellformed P3 [samples=$samples, pairs=$pairs]
check tower-wellformed P4 [samples=$samples, pairs=$pairs]
check tower-wellformed P1.pres1 [samples=$samples, pairs=$pairs]
check tower-wellformed P1.ispe [samples=$samples, pairs=$pairs]
check tower-wellformed G2 [samples=$samples, pairs=$pairs]
check tower-wellformed G3 [samples=$samples, pairs=$pairs]
check tower-wellformed G32 [samples=$samples, pairs=$pairs]
check tower-wellformed G7 [samples=$samples, pairs=$pairs]
check tower-wellformed NW [samples=$samples, pairs=$pairs]
check tower-wellformed PL [samples=$samples, pairs=$pairs]
check tower-wellformed PA [samples=$samples, pairs=$pairs]
check tower-wellformed S [samples=$samples, pairs=$pairs]
"#;

/// Text of a built-in suite.
pub fn suite_text(name: &str) -> Option<String> {
    let vals: &[(&str, &str)] = match name {
        "paper-all" => &[
            ("$rskew", "4"),
            ("$gcoeff", "3"),
            ("$pskew", "3"),
            ("$vpowers", "1; P1.v; P1.v^2; P1.v^3"),
            ("$pgrowth", "10"),
            ("$ggrowth", "8"),
            ("$samples", "300"),
            ("$pairs", "200"),
        ],
        "paper-quick" => &[
            ("$rskew", "2"),
            ("$gcoeff", "2"),
            ("$pskew", "2"),
            ("$vpowers", "1; P1.v; P1.v^2"),
            ("$pgrowth", "6"),
            ("$ggrowth", "5"),
            ("$samples", "30"),
            ("$pairs", "20"),
        ],
        _ => return None,
    };
    let mut text = TEMPLATE.trim_start().to_string();
    for (k, v) in vals {
        text = text.replace(k, v);
    }
    Some(text)
}
