#ifndef KKTCO_REPORT_HPP
#define KKTCO_REPORT_HPP

#include <string>
#include <vector>

namespace kktco {

enum class Verdict { Pass, Fail, Flag, Skip };

struct Clause {
    std::string name;
    Verdict verdict;
    std::string witness;
};

/// Line-oriented verification report: `CLAUSE <name> PASS|FAIL|FLAG|SKIP [witness]`.
/// Only FAIL clauses make a report fail.
class Report {
public:
    void add(std::string name, bool ok, std::string witness = {});
    /// A passing clause that keeps its value on the line.
    void info(std::string name, std::string value);
    void flag(std::string name, std::string note);
    void skip(std::string name, std::string note = {});
    /// Appends the clauses of other with "<prefix>." prepended to their names.
    void merge(const Report& other, const std::string& prefix = {});

    bool passed() const;
    const std::vector<Clause>& clauses() const { return clauses_; }
    const Clause* find(const std::string& name) const;
    std::string to_text() const;

private:
    std::vector<Clause> clauses_;
};

}  // namespace kktco

#endif  // KKTCO_REPORT_HPP
