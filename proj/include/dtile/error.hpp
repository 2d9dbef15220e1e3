#pragma once

#include <stdexcept>
#include <string>

namespace dtile {

// Typed failure conditions surfaced by the library. Everything that is a
// caller mistake (bad input, violated precondition) throws Error; expected
// negative outcomes (e.g. "this word is not a double tile") are returned as
// values, not thrown.
enum class Errc {
    NotClosed,
    NotSimple,
    NotBalanced,
    AreaMismatch,
    NotDoubleChain,
    IndexConvention,
    PatternMismatch,
    NotNonInterleaved,
    CaseMismatch,
    NotReducible,
    NotApplicable,
    InternalNonPositive,
    IrregularG,
    NotReachable,
    InvalidBlock,
    CapExceeded,
    WrongArea,
    BadPair,
    BadInput,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotBalanced: return "NotBalanced";
    case Errc::AreaMismatch: return "AreaMismatch";
    case Errc::NotDoubleChain: return "NotDoubleChain";
    case Errc::IndexConvention: return "IndexConvention";
    case Errc::PatternMismatch: return "PatternMismatch";
    case Errc::NotNonInterleaved: return "NotNonInterleaved";
    case Errc::CaseMismatch: return "CaseMismatch";
    case Errc::NotReducible: return "NotReducible";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::InternalNonPositive: return "InternalNonPositive";
    case Errc::IrregularG: return "IrregularG";
    case Errc::NotReachable: return "NotReachable";
    case Errc::InvalidBlock: return "InvalidBlock";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::WrongArea: return "WrongArea";
    case Errc::BadPair: return "BadPair";
    case Errc::BadInput: return "BadInput";
    case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace dtile
