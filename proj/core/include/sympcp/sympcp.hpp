#ifndef SYMPCP_SYMPCP_HPP_
#define SYMPCP_SYMPCP_HPP_

#include "sympcp/errors.hpp"
#include "sympcp/floyd.hpp"
#include "sympcp/freeness.hpp"
#include "sympcp/io.hpp"
#include "sympcp/matrix.hpp"
#include "sympcp/search.hpp"
#include "sympcp/words.hpp"

#endif  // SYMPCP_SYMPCP_HPP_
