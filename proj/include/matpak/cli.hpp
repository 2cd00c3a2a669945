#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <matpak/codec.hpp>
#include <matpak/matrix.hpp>
#include <matpak/ops.hpp>
#include <matpak/oracle.hpp>

namespace matpak::cli {

/// Exit statuses: 0 success, 1 algebraic/check/io failure, 2 parse failure,
/// 3 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMatError = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitUsage = 3;

inline constexpr double kCheckTolerance = 1e-9;

namespace detail {

inline constexpr const char* kUsage =
    "usage: matpak <op> <operand>... [op-args...] [--check] [--precision N|shortest]\n"
    "\n"
    "ops:\n"
    "  add A B        matrix sum\n"
    "  sub A B        matrix difference A - B\n"
    "  mul A B        matrix product A * B\n"
    "  pow A n        A to the positive integer power n\n"
    "  transpose A    transpose\n"
    "  det A          determinant (scalar)\n"
    "  inv A          inverse\n"
    "  adj A          adjugate (transpose of the cofactor matrix)\n"
    "  cof A          cofactor matrix\n"
    "  minor A i j    submatrix with row i and column j deleted (0-based)\n"
    "  is-square A    prints 1 if square, else 0\n"
    "  is-identity A  prints 1 if identity, 0 if not, 2 if not square\n"
    "  parse A        validate a bracket-dash matrix, print nothing\n"
    "  echo A         parse and re-print in canonical form\n"
    "\n"
    "operands: inline text like \"[[2 3 4]-[5 6 7]]\", @path to read a file,\n"
    "or - to read standard input (at most once).\n"
    "\n"
    "flags:\n"
    "  --check        recompute through the exact rational oracle and fail on drift\n"
    "  --precision N  print N decimal places instead of shortest round-trip form\n";

struct Command {
    std::string op;
    std::vector<std::string> operands; // matrix sources
    std::vector<std::int64_t> op_args; // exponent / indices
    bool check = false;
    std::optional<int> precision;      // nullopt = shortest
};

struct Arity {
    int matrices;
    int ints;
};

inline std::optional<Arity> arity_for(std::string_view op) {
    if (op == "add" || op == "sub" || op == "mul") return Arity{2, 0};
    if (op == "pow") return Arity{1, 1};
    if (op == "minor") return Arity{1, 2};
    if (op == "transpose" || op == "det" || op == "inv" || op == "adj" || op == "cof" ||
        op == "is-square" || op == "is-identity" || op == "parse" || op == "echo") {
        return Arity{1, 0};
    }
    return std::nullopt;
}

inline bool parse_int(std::string_view s, std::int64_t& out) {
    const auto rc = std::from_chars(s.data(), s.data() + s.size(), out);
    return rc.ec == std::errc{} && rc.ptr == s.data() + s.size();
}

inline std::string format_fixed(double v, int precision) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

inline std::string render_scalar(double v, const std::optional<int>& precision) {
    return precision ? format_fixed(v, *precision) : format_scalar(v);
}

inline std::string render_matrix(const Matrix& m, const std::optional<int>& precision) {
    if (!precision) return serialize(m);
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out.push_back('[');
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out.push_back(' ');
            out += format_fixed(m(i, j), *precision);
        }
        out.push_back(']');
        if (i + 1 < m.rows()) out.push_back('-');
    }
    out.push_back(']');
    return out;
}

} // namespace detail

/// Loads one operand: inline text, "@path" for a file, or "-" for stdin.
inline Result<Matrix, ParseError> load_operand(const std::string& source, std::istream& in,
                                               bool& io_failed, std::string& io_detail) {
    io_failed = false;
    std::string text;
    if (source == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else if (!source.empty() && source[0] == '@') {
        const std::string path = source.substr(1);
        std::ifstream f(path, std::ios::binary);
        if (!f) {
            io_failed = true;
            io_detail = "cannot read file '" + path + "'";
            return ParseError{ParseErrorKind::UnbalancedBrackets, 0, io_detail};
        }
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    } else {
        text = source;
    }
    return parse(text);
}

namespace detail {

inline int fail_usage(std::ostream& err, const std::string& why) {
    err << "UsageError: " << why << "\n";
    return kExitUsage;
}

inline int fail_mat(std::ostream& err, const MatError& e) {
    err << e.message() << "\n";
    return kExitMatError;
}

inline int run_command(const Command& cmd, std::istream& in, std::ostream& out,
                       std::ostream& err) {
    const auto arity = arity_for(cmd.op);
    if (!arity) return fail_usage(err, "unknown operation '" + cmd.op + "'");
    if (static_cast<int>(cmd.operands.size()) != arity->matrices ||
        static_cast<int>(cmd.op_args.size()) != arity->ints) {
        return fail_usage(err, "'" + cmd.op + "' takes " + std::to_string(arity->matrices) +
                                   " matrix operand(s) and " + std::to_string(arity->ints) +
                                   " integer argument(s)");
    }
    int stdin_count = 0;
    for (const auto& s : cmd.operands) {
        if (s == "-") ++stdin_count;
    }
    if (stdin_count > 1) return fail_usage(err, "at most one operand may be '-'");

    std::vector<Matrix> mats;
    for (std::size_t k = 0; k < cmd.operands.size(); ++k) {
        bool io_failed = false;
        std::string io_detail;
        auto m = load_operand(cmd.operands[k], in, io_failed, io_detail);
        if (io_failed) {
            err << "IoError: " << io_detail << "\n";
            return kExitMatError;
        }
        if (!m.ok()) {
            err << m.error().message() << " (operand " << (k + 1) << ")\n";
            return kExitParseError;
        }
        mats.push_back(std::move(m).value());
    }

    // Every op computes a matrix or scalar result; --check replays it through
    // the exact oracle before anything is printed.
    if (cmd.op == "is-square") {
        out << (mats[0].is_square() ? "1" : "0") << "\n";
        return kExitOk;
    }
    if (cmd.op == "is-identity") {
        switch (is_identity(mats[0])) {
            case IdentityVerdict::Identity: out << "1\n"; break;
            case IdentityVerdict::NotIdentity: out << "0\n"; break;
            case IdentityVerdict::NotSquare: out << "2\n"; break;
        }
        return kExitOk;
    }
    if (cmd.op == "parse") {
        return kExitOk; // loading already validated it
    }
    if (cmd.op == "echo") {
        out << render_matrix(mats[0], cmd.precision) << "\n";
        return kExitOk;
    }
    if (cmd.op == "det") {
        auto d = determinant(mats[0]);
        if (!d.ok()) return fail_mat(err, d.error());
        if (cmd.check) {
            auto exact = oracle::det_bareiss(oracle::lift(mats[0]));
            if (!exact.ok()) return fail_mat(err, exact.error());
            if (!oracle::compare_scalar(d.value(), exact.value(), kCheckTolerance)) {
                err << "CheckFailed: det deviates from the exact oracle value "
                    << exact.value().to_string() << "\n";
                return kExitMatError;
            }
        }
        out << render_scalar(d.value(), cmd.precision) << "\n";
        return kExitOk;
    }

    // Matrix-valued ops.
    Result<Matrix, MatError> result = [&]() -> Result<Matrix, MatError> {
        if (cmd.op == "add") return add(mats[0], mats[1]);
        if (cmd.op == "sub") return sub(mats[0], mats[1]);
        if (cmd.op == "mul") return mul(mats[0], mats[1]);
        if (cmd.op == "pow") return pow(mats[0], cmd.op_args[0]);
        if (cmd.op == "transpose") return transpose(mats[0]);
        if (cmd.op == "inv") return inverse(mats[0]);
        if (cmd.op == "adj") return adjoint(mats[0]);
        if (cmd.op == "cof") return cofactor(mats[0]);
        if (cmd.op == "minor") return minor(mats[0], cmd.op_args[0], cmd.op_args[1]);
        return MatError{MatErrorKind::InvalidSize, "cli", "unreachable op"};
    }();
    if (!result.ok()) return fail_mat(err, result.error());

    if (cmd.check) {
        auto exact = [&]() -> Result<oracle::RationalMatrix, MatError> {
            if (cmd.op == "add") return oracle::add(oracle::lift(mats[0]), oracle::lift(mats[1]));
            if (cmd.op == "sub") return oracle::sub(oracle::lift(mats[0]), oracle::lift(mats[1]));
            if (cmd.op == "mul") return oracle::mul(oracle::lift(mats[0]), oracle::lift(mats[1]));
            if (cmd.op == "pow") return oracle::pow(oracle::lift(mats[0]), cmd.op_args[0]);
            if (cmd.op == "transpose") return oracle::transpose(oracle::lift(mats[0]));
            if (cmd.op == "inv") return oracle::exact_inverse(oracle::lift(mats[0]));
            if (cmd.op == "adj") return oracle::exact_adjugate(oracle::lift(mats[0]));
            if (cmd.op == "cof") return oracle::cofactor(oracle::lift(mats[0]));
            return oracle::minor(oracle::lift(mats[0]), cmd.op_args[0], cmd.op_args[1]);
        }();
        if (!exact.ok()) return fail_mat(err, exact.error());
        if (!oracle::compare(result.value(), exact.value(), kCheckTolerance)) {
            err << "CheckFailed: " << cmd.op << " deviates from the exact oracle result\n";
            return kExitMatError;
        }
    }

    out << render_matrix(result.value(), cmd.precision) << "\n";
    return kExitOk;
}

} // namespace detail

/// Runs one command line (argv without the program name). All diagnostics go
/// to `err`, one line, prefixed by the error kind. Never throws.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    try {
        detail::Command cmd;
        std::vector<std::string> positional;
        for (std::size_t i = 0; i < args.size(); ++i) {
            const std::string& a = args[i];
            if (a == "--check") {
                cmd.check = true;
            } else if (a == "--precision") {
                if (i + 1 == args.size()) {
                    return detail::fail_usage(err, "--precision needs a value");
                }
                const std::string& v = args[++i];
                if (v == "shortest") {
                    cmd.precision.reset();
                } else {
                    std::int64_t p = 0;
                    if (!detail::parse_int(v, p) || p < 0 || p > 100) {
                        return detail::fail_usage(
                            err, "--precision takes 0..100 or 'shortest', got '" + v + "'");
                    }
                    cmd.precision = static_cast<int>(p);
                }
            } else if (a == "--help" || a == "-h") {
                out << detail::kUsage;
                return kExitOk;
            } else if (a.size() > 2 && a.rfind("--", 0) == 0) {
                return detail::fail_usage(err, "unknown flag '" + a + "'");
            } else {
                positional.push_back(a);
            }
        }
        if (positional.empty()) return detail::fail_usage(err, "no operation given");

        cmd.op = positional[0];
        const auto arity = detail::arity_for(cmd.op);
        if (!arity) return detail::fail_usage(err, "unknown operation '" + cmd.op + "'");

        // Operands come first, integer op-args after.
        for (std::size_t k = 1; k < positional.size(); ++k) {
            if (static_cast<int>(cmd.operands.size()) < arity->matrices) {
                cmd.operands.push_back(positional[k]);
            } else {
                std::int64_t v = 0;
                if (!detail::parse_int(positional[k], v)) {
                    return detail::fail_usage(err, "expected an integer argument, got '" +
                                                       positional[k] + "'");
                }
                cmd.op_args.push_back(v);
            }
        }
        return detail::run_command(cmd, in, out, err);
    } catch (const std::exception& e) {
        err << "InternalError: " << e.what() << "\n";
        return kExitMatError;
    } catch (...) {
        err << "InternalError: unexpected exception\n";
        return kExitMatError;
    }
}

} // namespace matpak::cli
