#include "lndt/transform.hpp"

namespace lndt {

namespace {

std::size_t copies(const std::vector<Formula>& v, Formula f) {
  std::size_t n = 0;
  for (Formula g : v) n += g == f;
  return n;
}

}  // namespace

std::vector<Formula> map_all(const std::vector<Formula>& v, const std::function<Formula(Formula)>& f) {
  std::vector<Formula> out;
  out.reserve(v.size());
  for (Formula g : v) out.push_back(f ? f(g) : g);
  return out;
}

Sequent map_sequent(const Sequent& s, const std::function<Formula(Formula)>& f) {
  return {map_all(s.ant, f), map_all(s.suc, f)};
}

std::vector<LineId> replay(const Proof& src, ProofBuilder& b, const ReplayHooks& h) {
  auto m = [&](Formula f) { return h.map ? h.map(f) : f; };
  std::vector<LineId> img;
  img.reserve(src.lines.size());
  for (std::size_t i = 0; i < src.lines.size(); ++i) {
    const ProofLine& line = src.lines[i];
    const Justification& j = line.just;
    std::vector<LineId> prem;
    for (auto q : j.premises) prem.push_back(img.at(q));
    std::optional<LineId> out;
    if (h.line) out = h.line(line, prem);
    if (!out) {
      switch (j.rule) {
        case Rule::Ax0:
          out = b.ax0();
          break;
        case Rule::Ax1:
          out = b.ax1();
          break;
        case Rule::Id: {
          Formula a = m(lit(j.lit));
          if (a.kind() == Kind::Lit) out = b.id(a.lit());
          else if (h.identity) out = h.identity(a);
          else throw BuildError("identity on a non-literal image");
          break;
        }
        case Rule::NegL:
          out = b.neg_l(j.lit.var);
          break;
        case Rule::NegR:
          out = b.neg_r(j.lit.var);
          break;
        case Rule::ThrL:
          out = b.thr_l(j.index);
          break;
        case Rule::ThrR:
          out = b.thr_r(j.index);
          break;
        case Rule::ExtLR:
          out = b.ext_lr(h.ext ? h.ext(j.ext) : j.ext);
          break;
        case Rule::ExtRL:
          out = b.ext_rl(h.ext ? h.ext(j.ext) : j.ext);
          break;
        case Rule::Hyp:
          out = b.hyp(j.tag, map_sequent(line.seq, h.map));
          break;
        case Rule::Cut:
          out = b.cut(prem[0], prem[1], m(j.formula));
          break;
        case Rule::WL:
          out = b.wl(prem[0], m(j.formula));
          break;
        case Rule::WR:
          out = b.wr(prem[0], m(j.formula));
          break;
        case Rule::CL:
          out = copies(b.seq(prem[0]).ant, m(j.formula)) > 1 ? b.cl(prem[0], m(j.formula)) : prem[0];
          break;
        case Rule::CR:
          out = copies(b.seq(prem[0]).suc, m(j.formula)) > 1 ? b.cr(prem[0], m(j.formula)) : prem[0];
          break;
        case Rule::PL:
          out = b.pl(prem[0], prem[1], m(j.formula));
          break;
        case Rule::PR:
          out = b.pr(prem[0], prem[1], m(j.formula));
          break;
        case Rule::PosPL:
          out = b.pos_pl(prem[0], prem[1], m(j.formula));
          break;
        case Rule::PosPR:
          out = b.pos_pr(prem[0], prem[1], m(j.formula));
          break;
        case Rule::OrL:
          out = b.or_l(prem[0], prem[1], m(j.formula));
          break;
        case Rule::OrR:
          out = b.or_r(prem[0], m(j.formula));
          break;
      }
    }
    LineId l = *out;
    if (h.after) l = h.after(i, l);
    img.push_back(l);
  }
  return img;
}

}  // namespace lndt
