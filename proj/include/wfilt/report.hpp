#pragma once

#include "wfilt/io.hpp"

namespace wfilt {

// Pages of a filtered complex packaged like an assembly result; r_max
// defaults to the stabilization index.
SSResult pages_result(const FilteredComplex& fk, std::optional<int> r_max = {});

std::string render_text(const SSResult& s);
Json render_machine(const SSResult& s);

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::string render_text_verdicts(const std::string& check, const std::vector<Verdict>& vs);
Json render_machine_verdicts(const std::string& check, const std::vector<Verdict>& vs);

}  // namespace wfilt
