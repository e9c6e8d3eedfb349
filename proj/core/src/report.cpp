#include "kktco/report.hpp"

namespace kktco {

namespace {

const char* verdict_text(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Flag: return "FLAG";
    case Verdict::Skip: return "SKIP";
    }
    return "?";
}

}  // namespace

void Report::add(std::string name, bool ok, std::string witness)
{
    clauses_.push_back({std::move(name), ok ? Verdict::Pass : Verdict::Fail, ok ? std::string() : std::move(witness)});
}

void Report::info(std::string name, std::string value)
{
    clauses_.push_back({std::move(name), Verdict::Pass, std::move(value)});
}

void Report::flag(std::string name, std::string note)
{
    clauses_.push_back({std::move(name), Verdict::Flag, std::move(note)});
}

void Report::skip(std::string name, std::string note)
{
    clauses_.push_back({std::move(name), Verdict::Skip, std::move(note)});
}

void Report::merge(const Report& other, const std::string& prefix)
{
    for (const auto& c : other.clauses_)
        clauses_.push_back({prefix.empty() ? c.name : prefix + "." + c.name, c.verdict, c.witness});
}

bool Report::passed() const
{
    for (const auto& c : clauses_)
        if (c.verdict == Verdict::Fail) return false;
    return true;
}

const Clause* Report::find(const std::string& name) const
{
    for (const auto& c : clauses_)
        if (c.name == name) return &c;
    return nullptr;
}

std::string Report::to_text() const
{
    std::string out;
    for (const auto& c : clauses_) {
        out += "CLAUSE " + c.name + " " + verdict_text(c.verdict);
        if (!c.witness.empty()) out += " " + c.witness;
        out += "\n";
    }
    return out;
}

}  // namespace kktco
