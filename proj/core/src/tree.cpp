#include "treeinv/tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "treeinv/errors.hpp"

namespace treeinv {

struct TreeShape::Node {
    std::vector<TreeShape> children;
    std::size_t degree;
};

struct LabelledTree::Node {
    std::vector<LabelledTree> children;
    Label label;
    std::size_t degree;
};

namespace {

void check_arity(int arity)
{
    if (arity < 2)
        throw std::invalid_argument("arity must be at least 2, got " + std::to_string(arity));
}

// Intermediate parse tree for the parenthesis encoding.
struct RawTree {
    std::vector<RawTree> kids;
};

class ShapeParser {
public:
    explicit ShapeParser(std::string_view text) : text_(text) {}

    RawTree parse_all()
    {
        RawTree t = parse();
        if (pos_ != text_.size())
            fail("trailing characters");
        return t;
    }

    std::size_t position() const { return pos_; }

private:
    RawTree parse()
    {
        expect('(');
        RawTree t;
        while (peek() == '(')
            t.kids.push_back(parse());
        expect(')');
        if (t.kids.size() == 1)
            fail("a vertex needs at least two children");
        return t;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError("tree encoding '" + std::string(text_) + "' at offset " +
                         std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

int infer_arity(const RawTree& t, int fallback)
{
    int arity = 0;
    std::function<void(const RawTree&)> visit = [&](const RawTree& r) {
        if (r.kids.empty())
            return;
        int k = static_cast<int>(r.kids.size());
        if (arity == 0)
            arity = k;
        else if (arity != k)
            throw ParseError("tree encoding mixes arities " + std::to_string(arity) + " and " +
                             std::to_string(k));
        for (const auto& c : r.kids)
            visit(c);
    };
    visit(t);
    return arity == 0 ? fallback : arity;
}

TreeShape build_shape(const RawTree& r, int arity)
{
    if (r.kids.empty())
        return TreeShape(arity);
    std::vector<TreeShape> children;
    children.reserve(r.kids.size());
    for (const auto& c : r.kids)
        children.push_back(build_shape(c, arity));
    return TreeShape::graft(std::move(children));
}

std::size_t vertex_offset_of_child(std::span<const LabelledTree> children, std::size_t child)
{
    // Vertex numbers preceding `child` inside the parent's subtree (parent counted once).
    std::size_t offset = 0;
    for (std::size_t c = 0; c < child; ++c)
        offset += children[c].degree();
    return child == 0 ? offset : offset + 1;
}

// Compositions of `total` into `parts` non-negative parts, lexicographic order.
void for_each_composition(std::size_t total, std::size_t parts,
                          const std::function<void(const std::vector<std::size_t>&)>& fn)
{
    std::vector<std::size_t> current(parts, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t left) {
        if (slot + 1 == parts) {
            current[slot] = left;
            fn(current);
            return;
        }
        for (std::size_t d = 0; d <= left; ++d) {
            current[slot] = d;
            rec(slot + 1, left - d);
        }
    };
    if (parts == 0)
        return;
    rec(0, total);
}

} // namespace

// --- TreeShape -------------------------------------------------------------

TreeShape::TreeShape(int arity) : arity_(arity) { check_arity(arity); }

TreeShape TreeShape::graft(std::vector<TreeShape> children)
{
    int k = static_cast<int>(children.size());
    check_arity(k);
    std::size_t degree = 1;
    for (const auto& c : children) {
        if (c.arity() != k)
            throw ArityMismatch("grafting " + std::to_string(k) + " children, one has arity " +
                                std::to_string(c.arity()));
        degree += c.degree();
    }
    TreeShape t(k);
    t.node_ = std::make_shared<const Node>(Node{std::move(children), degree});
    return t;
}

std::size_t TreeShape::degree() const noexcept { return node_ ? node_->degree : 0; }

std::size_t TreeShape::leaves() const noexcept
{
    return static_cast<std::size_t>(arity_ - 1) * degree() + 1;
}

std::span<const TreeShape> TreeShape::children() const noexcept
{
    if (!node_)
        return {};
    return node_->children;
}

std::string TreeShape::encode() const
{
    std::string out;
    std::function<void(const TreeShape&)> rec = [&](const TreeShape& t) {
        out += '(';
        for (const auto& c : t.children())
            rec(c);
        out += ')';
    };
    rec(*this);
    return out;
}

TreeShape TreeShape::decode(std::string_view text, int arity)
{
    ShapeParser parser(text);
    RawTree raw = parser.parse_all();
    return build_shape(raw, infer_arity(raw, arity));
}

bool operator==(const TreeShape& a, const TreeShape& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const TreeShape& a, const TreeShape& b)
{
    if (auto c = a.arity_ <=> b.arity_; c != 0)
        return c;
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    if (a.node_ == b.node_ || a.is_leaf())
        return std::strong_ordering::equal;
    auto ca = a.children();
    auto cb = b.children();
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (auto c = ca[i].degree() <=> cb[i].degree(); c != 0)
            return c;
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (auto c = ca[i] <=> cb[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

// --- LabelledTree ----------------------------------------------------------

LabelledTree::LabelledTree(int arity) : arity_(arity) { check_arity(arity); }

LabelledTree::LabelledTree(const TreeShape& shape, std::span<const Label> labels)
    : arity_(shape.arity())
{
    if (labels.size() != shape.degree())
        throw std::invalid_argument("tree of degree " + std::to_string(shape.degree()) + " needs " +
                                    std::to_string(shape.degree()) + " labels, got " +
                                    std::to_string(labels.size()));
    std::size_t next = 0;
    std::function<LabelledTree(const TreeShape&)> build = [&](const TreeShape& s) {
        if (s.is_leaf())
            return LabelledTree(s.arity());
        auto kids = s.children();
        std::vector<LabelledTree> children;
        children.reserve(kids.size());
        children.push_back(build(kids[0]));
        Label mine = labels[next++];
        for (std::size_t i = 1; i < kids.size(); ++i)
            children.push_back(build(kids[i]));
        return graft(std::move(children), mine);
    };
    *this = build(shape);
}

LabelledTree LabelledTree::graft(std::vector<LabelledTree> children, Label root)
{
    int k = static_cast<int>(children.size());
    if (k < 2)
        throw ArityMismatch("grafting needs at least two children, got " + std::to_string(k));
    std::size_t degree = 1;
    for (const auto& c : children) {
        if (c.arity() != k)
            throw ArityMismatch("grafting " + std::to_string(k) + " children, one has arity " +
                                std::to_string(c.arity()));
        degree += c.degree();
    }
    LabelledTree t(k);
    t.node_ = std::make_shared<const Node>(Node{std::move(children), root, degree});
    return t;
}

std::size_t LabelledTree::degree() const noexcept { return node_ ? node_->degree : 0; }

std::size_t LabelledTree::leaves() const noexcept
{
    return static_cast<std::size_t>(arity_ - 1) * degree() + 1;
}

std::span<const LabelledTree> LabelledTree::children() const noexcept
{
    if (!node_)
        return {};
    return node_->children;
}

Label LabelledTree::root_label() const
{
    if (!node_)
        throw std::logic_error("a leaf has no root label");
    return node_->label;
}

TreeShape LabelledTree::shape() const
{
    if (is_leaf())
        return TreeShape(arity_);
    std::vector<TreeShape> kids;
    kids.reserve(children().size());
    for (const auto& c : children())
        kids.push_back(c.shape());
    return TreeShape::graft(std::move(kids));
}

std::vector<Label> LabelledTree::labels() const
{
    std::vector<Label> out;
    out.reserve(degree());
    std::function<void(const LabelledTree&)> rec = [&](const LabelledTree& t) {
        if (t.is_leaf())
            return;
        auto kids = t.children();
        rec(kids[0]);
        out.push_back(t.root_label());
        for (std::size_t i = 1; i < kids.size(); ++i)
            rec(kids[i]);
    };
    rec(*this);
    return out;
}

Label LabelledTree::label(std::size_t vertex) const
{
    if (vertex < 1 || vertex > degree())
        throw std::out_of_range("vertex " + std::to_string(vertex) + " out of range");
    const LabelledTree* t = this;
    std::size_t v = vertex;
    while (true) {
        auto kids = t->children();
        std::size_t own = kids[0].degree() + 1;
        if (v < own) {
            t = &kids[0];
            continue;
        }
        if (v == own)
            return t->root_label();
        v -= own;
        for (std::size_t i = 1; i < kids.size(); ++i) {
            if (v <= kids[i].degree()) {
                t = &kids[i];
                break;
            }
            v -= kids[i].degree();
        }
    }
}

LabelledTree LabelledTree::delete_cup(std::size_t vertex) const
{
    if (vertex < 1 || vertex > degree())
        throw std::out_of_range("vertex " + std::to_string(vertex) + " out of range");
    auto kids = children();
    std::size_t own = kids[0].degree() + 1;
    if (vertex == own) {
        for (const auto& c : kids)
            if (!c.is_leaf())
                throw std::invalid_argument("vertex " + std::to_string(vertex) + " is not a cup");
        return LabelledTree(arity_);
    }
    std::vector<LabelledTree> out(kids.begin(), kids.end());
    for (std::size_t i = 0; i < kids.size(); ++i) {
        std::size_t offset = vertex_offset_of_child(kids, i);
        if (i == 0 ? vertex < own : (vertex > offset && vertex <= offset + kids[i].degree())) {
            out[i] = kids[i].delete_cup(vertex - offset);
            return graft(std::move(out), root_label());
        }
    }
    throw std::logic_error("unreachable vertex lookup");
}

LabelledTree LabelledTree::insert_cup(std::size_t leaf, Label l) const
{
    if (leaf >= leaves())
        throw std::out_of_range("leaf " + std::to_string(leaf) + " out of range");
    if (is_leaf())
        return graft(std::vector<LabelledTree>(static_cast<std::size_t>(arity_), LabelledTree(arity_)), l);
    auto kids = children();
    std::vector<LabelledTree> out(kids.begin(), kids.end());
    std::size_t first = 0;
    for (std::size_t i = 0; i < kids.size(); ++i) {
        std::size_t n = kids[i].leaves();
        if (leaf < first + n) {
            out[i] = kids[i].insert_cup(leaf - first, l);
            return graft(std::move(out), root_label());
        }
        first += n;
    }
    throw std::logic_error("unreachable leaf lookup");
}

std::string LabelledTree::encode(const Alphabet& alphabet) const
{
    std::string out = shape().encode();
    out += ':';
    bool first = true;
    for (Label l : labels()) {
        if (!first)
            out += ',';
        out += alphabet.token(l);
        first = false;
    }
    return out;
}

LabelledTree LabelledTree::decode(std::string_view text, const Alphabet& alphabet, int arity)
{
    auto colon = text.find(':');
    TreeShape shape = TreeShape::decode(text.substr(0, colon), arity);
    std::vector<Label> labels;
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string_view tok = rest.substr(0, comma);
            auto l = alphabet.find(tok);
            if (!l)
                throw ParseError("unknown label token '" + std::string(tok) + "' in '" +
                                 std::string(text) + "'");
            labels.push_back(*l);
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
    }
    if (labels.size() != shape.degree())
        throw ParseError("'" + std::string(text) + "' has " + std::to_string(labels.size()) +
                         " labels for " + std::to_string(shape.degree()) + " vertices");
    return LabelledTree(shape, labels);
}

bool operator==(const LabelledTree& a, const LabelledTree& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const LabelledTree& a, const LabelledTree& b)
{
    if (auto c = a.arity_ <=> b.arity_; c != 0)
        return c;
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    if (a.node_ == b.node_ || a.is_leaf())
        return std::strong_ordering::equal;
    auto ca = a.children();
    auto cb = b.children();
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (auto c = ca[i].degree() <=> cb[i].degree(); c != 0)
            return c;
    if (auto c = ca[0] <=> cb[0]; c != 0)
        return c;
    if (auto c = a.root_label() <=> b.root_label(); c != 0)
        return c;
    for (std::size_t i = 1; i < ca.size(); ++i)
        if (auto c = ca[i] <=> cb[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

// --- Pattern ---------------------------------------------------------------

Pattern Pattern::binary(Assoc assoc, Label v1, Label v2)
{
    if (assoc == Assoc::L)
        return Pattern{2, 2, v1, v2};
    return Pattern{2, 1, v2, v1};
}

Assoc Pattern::assoc() const
{
    if (arity != 2)
        throw std::logic_error("assoc() is defined for binary patterns only");
    return position == 2 ? Assoc::L : Assoc::R;
}

Label Pattern::v1() const { return assoc() == Assoc::L ? parent : child; }

Label Pattern::v2() const { return assoc() == Assoc::L ? child : parent; }

LabelledTree Pattern::to_tree() const
{
    const auto k = static_cast<std::size_t>(arity);
    std::vector<LabelledTree> leaves(k, LabelledTree(arity));
    LabelledTree inner = LabelledTree::graft(leaves, child);
    leaves[static_cast<std::size_t>(position - 1)] = inner;
    return LabelledTree::graft(std::move(leaves), parent);
}

Pattern Pattern::from_tree(const LabelledTree& t)
{
    if (t.degree() != 2)
        throw std::invalid_argument("a pattern is a degree-2 tree, got degree " +
                                    std::to_string(t.degree()));
    auto kids = t.children();
    for (std::size_t i = 0; i < kids.size(); ++i)
        if (!kids[i].is_leaf())
            return Pattern{t.arity(), static_cast<int>(i + 1), t.root_label(), kids[i].root_label()};
    throw std::logic_error("degree-2 tree without internal child");
}

std::string Pattern::to_string(const Alphabet& alphabet) const
{
    if (arity == 2)
        return std::string("(") + (assoc() == Assoc::L ? "L" : "R") + ";" + alphabet.token(v1()) +
               "," + alphabet.token(v2()) + ")";
    return "(" + std::to_string(position) + ";" + alphabet.token(parent) + "," +
           alphabet.token(child) + ")";
}

// --- free functions --------------------------------------------------------

std::vector<TreeShape> enumerate_shapes(int arity, std::size_t degree)
{
    check_arity(arity);
    const auto k = static_cast<std::size_t>(arity);
    std::vector<std::vector<TreeShape>> by_degree(degree + 1);
    by_degree[0].emplace_back(arity);
    for (std::size_t p = 1; p <= degree; ++p) {
        auto& out = by_degree[p];
        for_each_composition(p - 1, k, [&](const std::vector<std::size_t>& degs) {
            std::vector<TreeShape> pick(k, TreeShape(arity));
            std::function<void(std::size_t)> rec = [&](std::size_t slot) {
                if (slot == k) {
                    out.push_back(TreeShape::graft(pick));
                    return;
                }
                for (const auto& s : by_degree[degs[slot]]) {
                    pick[slot] = s;
                    rec(slot + 1);
                }
            };
            rec(0);
        });
    }
    return std::move(by_degree[degree]);
}

BigInt count_shapes(int arity, std::size_t degree)
{
    check_arity(arity);
    const auto k = static_cast<unsigned long>(arity);
    const auto n = static_cast<unsigned long>(degree);
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), k * n, n);
    BigInt denom = static_cast<unsigned long>((k - 1) * n + 1);
    return binom / denom;
}

std::vector<Pattern> local_patterns(const LabelledTree& t)
{
    std::vector<Pattern> out;
    std::function<void(const LabelledTree&)> rec = [&](const LabelledTree& s) {
        if (s.is_leaf())
            return;
        auto kids = s.children();
        for (std::size_t i = 0; i < kids.size(); ++i) {
            if (!kids[i].is_leaf())
                out.push_back(Pattern{s.arity(), static_cast<int>(i + 1), s.root_label(),
                                      kids[i].root_label()});
            rec(kids[i]);
        }
    };
    rec(t);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> cups(const LabelledTree& t)
{
    std::vector<std::size_t> out;
    std::function<void(const LabelledTree&, std::size_t)> rec = [&](const LabelledTree& s,
                                                                    std::size_t offset) {
        if (s.is_leaf())
            return;
        auto kids = s.children();
        std::size_t own = offset + kids[0].degree() + 1;
        rec(kids[0], offset);
        if (std::all_of(kids.begin(), kids.end(), [](const LabelledTree& c) { return c.is_leaf(); }))
            out.push_back(own);
        std::size_t next = own;
        for (std::size_t i = 1; i < kids.size(); ++i) {
            rec(kids[i], next);
            next += kids[i].degree();
        }
    };
    rec(t, 0);
    return out;
}

std::vector<LeafRange> child_leaf_ranges(const TreeShape& shape, std::size_t vertex)
{
    if (vertex < 1 || vertex > shape.degree())
        throw std::out_of_range("vertex " + std::to_string(vertex) + " out of range");
    const TreeShape* t = &shape;
    std::size_t v = vertex;
    std::size_t first_leaf = 0;
    while (true) {
        auto kids = t->children();
        std::size_t own = kids[0].degree() + 1;
        if (v < own) {
            t = &kids[0];
            continue;
        }
        if (v == own) {
            std::vector<LeafRange> out;
            std::size_t f = first_leaf;
            for (const auto& c : kids) {
                out.push_back({f, f + c.leaves() - 1});
                f += c.leaves();
            }
            return out;
        }
        v -= own;
        first_leaf += kids[0].leaves();
        for (std::size_t i = 1; i < kids.size(); ++i) {
            if (v <= kids[i].degree()) {
                t = &kids[i];
                break;
            }
            v -= kids[i].degree();
            first_leaf += kids[i].leaves();
        }
    }
}

} // namespace treeinv
