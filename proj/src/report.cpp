#include "paralab/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace paralab::report {

Json profileJson(const Profile& profile) {
  Json rules = Json::array();
  for (RuleId r : allRules())
    if (profile.ruleEnabled(r)) rules.push_back(std::string(ruleName(r)));
  Json j;
  j["name"] = profile.name;
  j["rules"] = std::move(rules);
  j["structural"] = std::string(structuralName(profile.structural));
  j["linear_scope"] = std::string(linearScopeName(profile.linearScope));
  return j;
}

Json usageJson(const UsageReport& usage) {
  Json arr = Json::array();
  for (const UsageEntry& e : usage.entries) {
    Json entry;
    entry["kind"] = e.kind == UsageKind::Assumption ? "assumption"
                  : e.kind == UsageKind::Block ? "subproof"
                                               : "line";
    entry["label"] = e.label;
    entry["count"] = e.count;
    entry["cited_by"] = e.citedBy;
    arr.push_back(std::move(entry));
  }
  return arr;
}

std::string sequentText(const Sequent& sequent) {
  std::string out;
  for (std::size_t i = 0; i < sequent.hypotheses.size(); ++i)
    out += (i ? ", " : "") + printFormula(sequent.hypotheses[i]);
  out += out.empty() ? "|- " : " |- ";
  out += printFormula(sequent.conclusion);
  return out;
}

std::string valuationText(const Valuation& v) {
  std::string out;
  for (const auto& [id, value] : v) {
    if (!out.empty()) out += ", ";
    out += id + "=" + truthValueChar(value);
  }
  return out;
}

Json valuationJson(const Valuation& v) {
  Json j;
  for (const auto& [id, value] : v) j[id] = std::string(1, truthValueChar(value));
  return j;
}

Json checkJson(const ProofScript& proof, const CheckResult& result) {
  Json j;
  j["proof"] = proof.name;
  j["verdict"] = result.valid ? "valid" : "invalid";
  Json lines = Json::array();
  for (const LineVerdict& v : result.lines) {
    Json line;
    line["label"] = v.label;
    line["ok"] = v.ok;
    if (!v.ok) {
      line["reason"] = v.reason;
      line["detail"] = v.detail;
    }
    lines.push_back(std::move(line));
  }
  j["lines"] = std::move(lines);
  if (result.established) j["established"] = sequentText(*result.established);
  if (result.firstFailure) {
    Json ff;
    ff["at"] = result.firstFailure->first;
    ff["reason"] = result.firstFailure->second;
    j["first_failure"] = std::move(ff);
  }
  j["usage"] = usageJson(result.usage);
  return j;
}

Json matrixJson(const MatrixReport& matrix) {
  Json j;
  j["profiles"] = matrix.profiles;
  j["proofs"] = matrix.proofs;
  Json cells;
  for (const std::string& proof : matrix.proofs) {
    Json row;
    for (const std::string& profile : matrix.profiles) {
      const MatrixCell& cell = matrix.cells.at(proof).at(profile);
      Json c;
      c["verdict"] = cell.valid ? "valid" : "invalid";
      if (!cell.valid) {
        c["at"] = cell.at;
        c["reason"] = cell.reason;
      }
      row[profile] = std::move(c);
    }
    cells[proof] = std::move(row);
  }
  j["cells"] = std::move(cells);
  return j;
}

MatrixReport matrixFromJson(const Json& j) {
  MatrixReport matrix;
  try {
    matrix.profiles = j.at("profiles").get<std::vector<std::string>>();
    matrix.proofs = j.at("proofs").get<std::vector<std::string>>();
    for (const std::string& proof : matrix.proofs) {
      for (const std::string& profile : matrix.profiles) {
        const Json& c = j.at("cells").at(proof).at(profile);
        MatrixCell cell;
        cell.valid = c.at("verdict").get<std::string>() == "valid";
        if (!cell.valid) {
          cell.at = c.at("at").get<std::string>();
          cell.reason = c.at("reason").get<std::string>();
        }
        matrix.cells[proof][profile] = cell;
      }
    }
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed matrix JSON: ") + e.what());
  }
  return matrix;
}

namespace {

struct LineDisplay {
  std::string label;
  std::string text;
};

void collectDisplays(const std::vector<Step>& steps, std::vector<LineDisplay>& out) {
  for (const Step& s : steps) {
    if (s.isAssume()) {
      out.push_back({s.assume().label, "assume " + printFormula(s.assume().formula)});
    } else if (s.isDerived()) {
      const DerivedStep& d = s.derived();
      std::string text = printFormula(d.formula) + "  [" + std::string(ruleName(d.just.rule));
      std::vector<std::string> args;
      if (d.just.rule == RuleId::Subst) {
        args.push_back(*d.just.defName);
        args.push_back(d.just.direction == SubstDirection::Fold ? "fold" : "unfold");
      } else if (d.just.rule == RuleId::DefBi) {
        args.push_back(*d.just.defName);
      } else if (d.just.rule == RuleId::Bivalence) {
        args.push_back(*d.just.caseName);
      }
      args.insert(args.end(), d.just.cited.begin(), d.just.cited.end());
      for (std::size_t i = 0; i < args.size(); ++i) text += (i == 0 ? " " : ", ") + args[i];
      text += "]";
      out.push_back({d.label, std::move(text)});
    } else {
      out.push_back({s.subproof().id, "sub"});
      collectDisplays(s.subproof().steps, out);
    }
  }
}

}  // namespace

std::string checkText(const ProofScript& proof, const CheckResult& result,
                      const Profile& profile) {
  std::vector<LineDisplay> displays;
  collectDisplays(proof.steps, displays);
  displays.push_back({"qed", "qed " + printFormula(proof.conclusion)});
  std::map<std::string, std::string> textOf;
  for (const LineDisplay& d : displays) textOf.emplace(d.label, d.text);

  std::size_t width = 5;
  for (const LineVerdict& v : result.lines) width = std::max(width, v.label.size());

  std::ostringstream out;
  out << "proof " << proof.name << " (profile: " << profile.name << ", "
      << structuralName(profile.structural) << ")\n";
  for (const LineVerdict& v : result.lines) {
    out << "  " << v.label << std::string(width - v.label.size() + 2, ' ')
        << (v.ok ? "ok    " : "FAIL  ");
    auto it = textOf.find(v.label);
    if (v.ok) {
      out << (it != textOf.end() ? it->second : "") << "\n";
    } else {
      out << v.reason << ": " << v.detail << "\n";
    }
  }
  out << "verdict: " << (result.valid ? "valid" : "invalid") << "\n";
  if (result.established) out << "established: " << sequentText(*result.established) << "\n";
  return out.str();
}

std::string usageText(const std::string& proofName, const UsageReport& usage) {
  std::ostringstream out;
  out << "proof " << proofName << "\n";
  for (const UsageEntry& e : usage.entries) {
    out << "  "
        << (e.kind == UsageKind::Assumption ? "assumption"
            : e.kind == UsageKind::Block ? "subproof"
                                         : "line")
        << " " << e.label << ": " << e.count << (e.count == 1 ? " use" : " uses");
    if (!e.citedBy.empty()) {
      out << " (";
      for (std::size_t i = 0; i < e.citedBy.size(); ++i) out << (i ? ", " : "") << e.citedBy[i];
      out << ")";
    }
    if (e.contraction()) out << "  [contraction]";
    out << "\n";
  }
  return out.str();
}

std::string matrixText(const MatrixReport& matrix) {
  auto cellText = [](const MatrixCell& c) {
    return c.valid ? std::string("valid") : "invalid@" + c.at + "(" + c.reason + ")";
  };
  std::vector<std::size_t> widths;
  std::size_t nameWidth = 5;
  for (const std::string& p : matrix.proofs) nameWidth = std::max(nameWidth, p.size());
  for (const std::string& profile : matrix.profiles) {
    std::size_t w = profile.size();
    for (const std::string& proof : matrix.proofs)
      w = std::max(w, cellText(matrix.cells.at(proof).at(profile)).size());
    widths.push_back(w);
  }
  std::ostringstream out;
  out << "proof" << std::string(nameWidth - 5 + 2, ' ');
  for (std::size_t i = 0; i < matrix.profiles.size(); ++i)
    out << matrix.profiles[i]
        << std::string(widths[i] - matrix.profiles[i].size() + (i + 1 < widths.size() ? 2 : 0),
                       ' ');
  out << "\n";
  for (const std::string& proof : matrix.proofs) {
    out << proof << std::string(nameWidth - proof.size() + 2, ' ');
    for (std::size_t i = 0; i < matrix.profiles.size(); ++i) {
      std::string cell = cellText(matrix.cells.at(proof).at(matrix.profiles[i]));
      out << cell;
      if (i + 1 < matrix.profiles.size()) out << std::string(widths[i] - cell.size() + 2, ' ');
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace paralab::report
