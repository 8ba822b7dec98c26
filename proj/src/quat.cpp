#include "bicircle/quat.hpp"

#include <ostream>
#include <sstream>

namespace bicircle {

std::string Quat::to_string() const {
    std::ostringstream os;
    os << "(" << re << ", " << x << "i, " << y << "j, " << z << "k)";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Quat& q) { return os << q.to_string(); }

} // namespace bicircle
