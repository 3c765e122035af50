/*
 * Copyright (c) the qroute authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qroute/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "qroute/errors.hpp"

namespace qroute {

namespace {

struct Token {
    enum Type { Ident, Number, String, Symbol, Arrow, End } type = End;
    std::string text;
    double value = 0.0;
    int line = 0;
    int col = 0;
};

class Lexer {
  public:
    Lexer(const std::string &text, std::string source) : text_(text), source_(std::move(source)) {}

    const Token &peek() {
        if (!has_)
            next_ = lex();
        has_ = true;
        return next_;
    }

    Token take() {
        const Token t = peek();
        has_ = false;
        return t;
    }

    [[noreturn]] void fail(const Token &at, const std::string &msg) const {
        throw QasmError(source_ + ":" + std::to_string(at.line) + ":" + std::to_string(at.col) +
                        ": " + msg);
    }

  private:
    Token lex() {
        skip_ws_and_comments();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= text_.size()) {
            t.type = Token::End;
            return t;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                advance();
            t.type = Token::Ident;
            t.text = text_.substr(start, pos_ - start);
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t start = pos_;
            while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '.'))
                advance();
            if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
                advance();
                if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
                    advance();
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    advance();
            }
            t.type = Token::Number;
            t.text = text_.substr(start, pos_ - start);
            try {
                t.value = std::stod(t.text);
            } catch (...) {
                fail(t, "malformed number '" + t.text + "'");
            }
            return t;
        }
        if (c == '"') {
            advance();
            size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != '"')
                advance();
            if (pos_ >= text_.size())
                fail(t, "unterminated string");
            t.type = Token::String;
            t.text = text_.substr(start, pos_ - start);
            advance();
            return t;
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            advance();
            advance();
            t.type = Token::Arrow;
            t.text = "->";
            return t;
        }
        static const std::string symbols = ";,()[]{}+-*/=<>";
        if (symbols.find(c) != std::string::npos) {
            t.type = Token::Symbol;
            t.text = std::string(1, c);
            advance();
            return t;
        }
        fail(t, std::string("unexpected character '") + c + "'");
    }

    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string &text_;
    std::string source_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token next_;
    bool has_ = false;
};

struct RegisterRef {
    std::string name;
    int index = -1; // -1: whole register
};

class Parser {
  public:
    Parser(const std::string &text, const std::string &source) : lex_(text, source) {}

    Circuit run() {
        expect_header();
        while (lex_.peek().type != Token::End)
            statement();
        return std::move(circuit_);
    }

  private:
    void expect_header() {
        Token t = lex_.take();
        if (t.type != Token::Ident || t.text != "OPENQASM")
            lex_.fail(t, "expected 'OPENQASM 2.0;' header");
        Token v = lex_.take();
        if (v.type != Token::Number || v.text != "2.0")
            lex_.fail(v, "only OpenQASM version 2.0 is supported");
        expect_symbol(";");
    }

    void statement() {
        Token t = lex_.take();
        if (t.type != Token::Ident)
            lex_.fail(t, "expected a statement");
        const std::string &kw = t.text;
        if (kw == "include") {
            Token s = lex_.take();
            if (s.type != Token::String)
                lex_.fail(s, "expected file name string after include");
            expect_symbol(";");
            return;
        }
        if (kw == "qreg" || kw == "creg") {
            parse_reg(kw == "qreg");
            return;
        }
        if (kw == "gate" || kw == "opaque" || kw == "if" || kw == "reset")
            lex_.fail(t, "unsupported OpenQASM construct '" + kw + "'");
        if (kw == "measure") {
            parse_measure(t);
            return;
        }
        if (kw == "barrier") {
            parse_barrier(t);
            return;
        }
        parse_gate(t);
    }

    void parse_reg(bool quantum) {
        Token name = lex_.take();
        if (name.type != Token::Ident)
            lex_.fail(name, "expected register name");
        expect_symbol("[");
        Token size = lex_.take();
        if (size.type != Token::Number || size.value < 1 ||
            size.value != std::floor(size.value))
            lex_.fail(size, "register size must be a positive integer");
        expect_symbol("]");
        expect_symbol(";");
        auto &table = quantum ? qreg_offsets_ : creg_offsets_;
        if (table.count(name.text) || (quantum ? creg_offsets_ : qreg_offsets_).count(name.text))
            lex_.fail(name, "register '" + name.text + "' already declared");
        int n = static_cast<int>(size.value);
        if (quantum) {
            table[name.text] = {circuit_.num_logical, n};
            circuit_.num_logical += n;
            circuit_.qregs.emplace_back(name.text, n);
        } else {
            table[name.text] = {circuit_.num_clbits, n};
            circuit_.num_clbits += n;
            circuit_.cregs.emplace_back(name.text, n);
        }
    }

    RegisterRef parse_arg() {
        Token name = lex_.take();
        if (name.type != Token::Ident)
            lex_.fail(name, "expected register operand");
        RegisterRef ref{name.text, -1};
        if (lex_.peek().type == Token::Symbol && lex_.peek().text == "[") {
            lex_.take();
            Token idx = lex_.take();
            if (idx.type != Token::Number || idx.value < 0 || idx.value != std::floor(idx.value))
                lex_.fail(idx, "index must be a non-negative integer");
            ref.index = static_cast<int>(idx.value);
            expect_symbol("]");
        }
        return ref;
    }

    std::pair<int, int> resolve(const RegisterRef &ref, bool quantum, const Token &at) {
        const auto &table = quantum ? qreg_offsets_ : creg_offsets_;
        auto it = table.find(ref.name);
        if (it == table.end())
            lex_.fail(at, std::string(quantum ? "quantum" : "classical") + " register '" +
                              ref.name + "' not declared");
        auto [offset, size] = it->second;
        if (ref.index >= 0) {
            if (ref.index >= size)
                lex_.fail(at, "index " + std::to_string(ref.index) + " out of range for '" +
                                  ref.name + "[" + std::to_string(size) + "]'");
            return {offset + ref.index, 1};
        }
        return {offset, size};
    }

    void parse_measure(const Token &at) {
        RegisterRef q = parse_arg();
        Token arrow = lex_.take();
        if (arrow.type != Token::Arrow)
            lex_.fail(arrow, "expected '->' in measure");
        RegisterRef c = parse_arg();
        expect_symbol(";");
        auto [qoff, qn] = resolve(q, true, at);
        auto [coff, cn] = resolve(c, false, at);
        if (qn != cn)
            lex_.fail(at, "measure operand sizes differ (" + std::to_string(qn) + " vs " +
                              std::to_string(cn) + ")");
        for (int i = 0; i < qn; ++i) {
            Gate g;
            g.kind = GateKind::Measure;
            g.qubits = {qoff + i};
            g.clbit = coff + i;
            push_gate(g);
        }
    }

    void parse_barrier(const Token &at) {
        std::vector<int> qubits;
        while (true) {
            RegisterRef r = parse_arg();
            auto [off, n] = resolve(r, true, at);
            for (int i = 0; i < n; ++i)
                qubits.push_back(off + i);
            if (lex_.peek().type == Token::Symbol && lex_.peek().text == ",") {
                lex_.take();
                continue;
            }
            break;
        }
        expect_symbol(";");
        Gate g;
        g.kind = GateKind::Barrier;
        g.qubits = std::move(qubits);
        push_gate(g);
    }

    void parse_gate(const Token &name_tok) {
        std::string name = name_tok.text;
        // OpenQASM built-in aliases.
        if (name == "CX")
            name = "cx";
        if (name == "U")
            name = "u3";
        GateKind kind;
        if (!kind_from_name(name, kind) || kind == GateKind::Barrier || kind == GateKind::Measure)
            lex_.fail(name_tok, "unsupported gate '" + name_tok.text + "'");

        std::vector<double> params;
        if (lex_.peek().type == Token::Symbol && lex_.peek().text == "(") {
            lex_.take();
            if (!(lex_.peek().type == Token::Symbol && lex_.peek().text == ")")) {
                params.push_back(parse_expr());
                while (lex_.peek().type == Token::Symbol && lex_.peek().text == ",") {
                    lex_.take();
                    params.push_back(parse_expr());
                }
            }
            expect_symbol(")");
        }
        if (static_cast<int>(params.size()) != kind_num_params(kind))
            lex_.fail(name_tok, "gate '" + name + "' expects " +
                                    std::to_string(kind_num_params(kind)) + " parameter(s), got " +
                                    std::to_string(params.size()));

        std::vector<RegisterRef> args;
        args.push_back(parse_arg());
        while (lex_.peek().type == Token::Symbol && lex_.peek().text == ",") {
            lex_.take();
            args.push_back(parse_arg());
        }
        expect_symbol(";");

        int arity = kind_arity(kind);
        if (static_cast<int>(args.size()) != arity)
            lex_.fail(name_tok, "gate '" + name + "' expects " + std::to_string(arity) +
                                    " operand(s), got " + std::to_string(args.size()));

        if (arity == 1) {
            auto [off, n] = resolve(args[0], true, name_tok);
            for (int i = 0; i < n; ++i) {
                Gate g;
                g.kind = kind;
                g.params = params;
                g.qubits = {off + i};
                push_gate(g);
            }
            return;
        }
        // Two-qubit gates take explicitly indexed operands.
        std::vector<int> qubits;
        for (const auto &a : args) {
            if (a.index < 0)
                lex_.fail(name_tok,
                          "whole-register operand of a two-qubit gate is not supported");
            qubits.push_back(resolve(a, true, name_tok).first);
        }
        Gate g;
        g.kind = kind;
        g.params = params;
        g.qubits = std::move(qubits);
        push_gate(g);
    }

    double parse_expr() {
        double v = parse_term();
        while (lex_.peek().type == Token::Symbol &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            std::string op = lex_.take().text;
            double rhs = parse_term();
            v = op == "+" ? v + rhs : v - rhs;
        }
        return v;
    }

    double parse_term() {
        double v = parse_unary();
        while (lex_.peek().type == Token::Symbol &&
               (lex_.peek().text == "*" || lex_.peek().text == "/")) {
            Token op = lex_.take();
            double rhs = parse_unary();
            if (op.text == "/" && rhs == 0.0)
                lex_.fail(op, "division by zero in angle expression");
            v = op.text == "*" ? v * rhs : v / rhs;
        }
        return v;
    }

    double parse_unary() {
        const Token &t = lex_.peek();
        if (t.type == Token::Symbol && t.text == "-") {
            lex_.take();
            return -parse_unary();
        }
        if (t.type == Token::Symbol && t.text == "(") {
            lex_.take();
            double v = parse_expr();
            expect_symbol(")");
            return v;
        }
        Token tok = lex_.take();
        if (tok.type == Token::Number)
            return tok.value;
        if (tok.type == Token::Ident && tok.text == "pi")
            return M_PI;
        lex_.fail(tok, "expected a number, 'pi' or parenthesized expression");
    }

    void expect_symbol(const std::string &s) {
        Token t = lex_.take();
        if ((t.type != Token::Symbol && t.type != Token::Arrow) || t.text != s)
            lex_.fail(t, "expected '" + s + "'");
    }

    void push_gate(Gate g) {
        g.id = static_cast<int>(circuit_.gates.size());
        validate_gate(g, std::max(circuit_.num_logical, 1));
        circuit_.gates.push_back(std::move(g));
    }

    Lexer lex_;
    Circuit circuit_;
    std::unordered_map<std::string, std::pair<int, int>> qreg_offsets_;
    std::unordered_map<std::string, std::pair<int, int>> creg_offsets_;
};

std::string format_param(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

Circuit parse_qasm(const std::string &text, const std::string &source_name) {
    return Parser(text, source_name).run();
}

Circuit parse_qasm_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw QasmError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_qasm(buf.str(), path);
}

std::string emit_qasm(const MappedCircuit &mc) {
    std::string out;
    out += "OPENQASM 2.0;\n";
    out += "include \"qelib1.inc\";\n";
    out += "// initial mapping:";
    for (int l = 0; l < mc.initial_mapping.num_logical(); ++l)
        out += " " + std::to_string(l) + "->" + std::to_string(mc.initial_mapping.physical(l));
    out += "\n";
    out += "qreg q[" + std::to_string(mc.num_physical) + "];\n";
    if (mc.num_clbits > 0)
        out += "creg c[" + std::to_string(mc.num_clbits) + "];\n";
    for (const auto &rg : mc.gates) {
        const Gate &g = rg.gate;
        out += kind_name(g.kind);
        if (!g.params.empty()) {
            out += "(";
            for (size_t i = 0; i < g.params.size(); ++i) {
                if (i)
                    out += ",";
                out += format_param(g.params[i]);
            }
            out += ")";
        }
        out += " ";
        for (size_t i = 0; i < g.qubits.size(); ++i) {
            if (i)
                out += ",";
            out += "q[" + std::to_string(g.qubits[i]) + "]";
        }
        if (g.kind == GateKind::Measure)
            out += " -> c[" + std::to_string(g.clbit) + "]";
        out += ";\n";
    }
    return out;
}

std::optional<std::vector<int>> parse_initial_mapping_comment(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    const std::string prefix = "// initial mapping:";
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) != 0)
            continue;
        std::istringstream body(line.substr(prefix.size()));
        std::vector<int> fwd;
        std::string entry;
        while (body >> entry) {
            auto pos = entry.find("->");
            if (pos == std::string::npos)
                return std::nullopt;
            try {
                int l = std::stoi(entry.substr(0, pos));
                int p = std::stoi(entry.substr(pos + 2));
                if (l != static_cast<int>(fwd.size()))
                    return std::nullopt;
                fwd.push_back(p);
            } catch (...) {
                return std::nullopt;
            }
        }
        return fwd;
    }
    return std::nullopt;
}

MappedCircuit decompose_swaps(const MappedCircuit &mc) {
    MappedCircuit out = mc;
    out.gates.clear();
    out.gates.reserve(mc.gates.size());
    for (const auto &rg : mc.gates) {
        if (rg.gate.kind != GateKind::Swap) {
            out.gates.push_back(rg);
            continue;
        }
        int a = rg.gate.qubits[0];
        int b = rg.gate.qubits[1];
        for (int i = 0; i < 3; ++i) {
            RoutedGate cx = rg;
            cx.gate.kind = GateKind::Cx;
            cx.gate.qubits = (i == 1) ? std::vector<int>{b, a} : std::vector<int>{a, b};
            out.gates.push_back(std::move(cx));
        }
    }
    return out;
}

MappedCircuit as_mapped(const Circuit &c, int num_physical) {
    MappedCircuit mc;
    mc.num_physical = num_physical;
    mc.num_logical = c.num_logical;
    mc.num_clbits = c.num_clbits;
    mc.initial_mapping = Mapping::identity(c.num_logical, num_physical);
    mc.final_mapping = mc.initial_mapping;
    mc.gates.reserve(c.gates.size());
    for (const Gate &g : c.gates)
        mc.gates.push_back(RoutedGate{g, false});
    return mc;
}

} // namespace qroute
