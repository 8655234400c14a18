#include "kunzlab/json_io.hpp"

namespace kunzlab {

Json to_json(const NumericalSemigroup& s) {
    const AperyData ap = s.apery();
    Json j;
    j["small_elements"] = s.small_elements();
    j["conductor"] = s.conductor();
    j["multiplicity"] = s.multiplicity();
    j["frobenius"] = s.frobenius();
    j["depth"] = s.depth();
    j["apery"] = ap.values;
    j["kunz"] = ap.kunz;
    j["genus"] = s.genus();
    return j;
}

Json to_json(const Violation& v) {
    Json j;
    j["kind"] = v.kind == ConditionKind::First ? "first" : "second";
    j["i"] = v.i;
    j["j"] = v.j;
    j["target"] = v.target;
    return j;
}

Json validation_json(const Word& w) {
    Json j;
    j["word"] = w.to_string();
    j["is_kunz"] = is_kunz(w);
    j["depth"] = word_depth(w);
    j["violations"] = Json::array();
    for (const Violation& v : violations(w)) j["violations"].push_back(to_json(v));
    return j;
}

Json to_json(const std::vector<Word>& words) {
    Json j = Json::array();
    for (const Word& w : words) j.push_back(w.to_string());
    return j;
}

Json to_json(const NerodeReport& report) {
    Json j = Json::array();
    for (const NerodeSeparation& s : report.separations) {
        Json row;
        row["i"] = s.i;
        row["j"] = s.j;
        row["suffix"] = s.suffix.to_string();
        row["member_i"] = s.member_i;
        row["member_j"] = s.member_j;
        j.push_back(std::move(row));
    }
    return j;
}

Json to_json(const BaderMouraReport& report) {
    Json j = Json::array();
    const auto& a = report.word.letters();
    auto piece = [&](std::size_t from, std::size_t to) {
        return Word(std::vector<Letter>(a.begin() + static_cast<std::ptrdiff_t>(from),
                                        a.begin() + static_cast<std::ptrdiff_t>(to)))
            .to_string();
    };
    for (const PumpRecord& r : report.records) {
        const Decomposition& d = r.cuts;
        Json row;
        row["cuts"] = {d.c1, d.c2, d.c3, d.c4};
        row["u"] = piece(0, d.c1);
        row["v"] = piece(d.c1, d.c2);
        row["x"] = piece(d.c2, d.c3);
        row["y"] = piece(d.c3, d.c4);
        row["z"] = piece(d.c4, a.size());
        switch (r.outcome) {
            case PumpOutcome::NotKunz:
                row["status"] = "refuted";
                row["k"] = r.k;
                row["reason"] = "not_kunz";
                break;
            case PumpOutcome::WrongDepth:
                row["status"] = "refuted";
                row["k"] = r.k;
                row["reason"] = "wrong_depth";
                break;
            case PumpOutcome::NoRefutation:
                row["status"] = "no_refutation";
                row["k"] = nullptr;
                row["reason"] = "survived k <= " + std::to_string(report.k_max);
                break;
        }
        j.push_back(std::move(row));
    }
    return j;
}

Json to_json(const lba::RunResult& result) {
    Json j;
    j["verdict"] = result.verdict == lba::Verdict::Accept ? "accept" : "reject";
    j["steps"] = result.steps;
    j["cells_used"] = result.cells_used;
    j["bound"] = result.bound;
    return j;
}

}  // namespace kunzlab
